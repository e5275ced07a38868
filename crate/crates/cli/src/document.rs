use serde::{Deserialize, Serialize};

use chevalley::exactring::{Ring, SparseMatrix};
use chevalley::minuscule::WeightBasis;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub rank: usize,
    /// 1-based node labels.
    pub nodes: Vec<usize>,
    pub generator: String,
    pub parameter: Option<String>,
    /// Least primitive root of a prime field, when the ring is one.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub primitive_root: Option<u64>,
}

/// A matrix with its ring and basis, as written to and read from JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub dim: usize,
    pub ring: String,
    /// `[row, col, value]`, 0-based, sorted by row then column.
    pub entries: Vec<(usize, usize, String)>,
    pub basis: Vec<Vec<i64>>,
    pub metadata: Metadata,
}

impl MatrixDocument {
    pub fn new(
        m: &SparseMatrix,
        basis: &WeightBasis,
        generator: String,
        parameter: Option<String>,
    ) -> Self {
        let ring = m.ring();
        let datum = basis.datum();
        Self {
            dim: m.dim(),
            ring: ring.to_string(),
            entries: m
                .entries()
                .map(|(r, c, v)| (r, c, ring.format(v)))
                .collect(),
            basis: basis.weights().iter().map(|w| w.0.clone()).collect(),
            metadata: Metadata {
                lie_type: datum.lie_type().to_string(),
                rank: datum.rank(),
                nodes: basis.nodes().iter().map(|k| k + 1).collect(),
                generator,
                parameter,
                primitive_root: match ring {
                    Ring::PrimeField(_) => ring.primitive_root(),
                    _ => None,
                },
            },
        }
    }

    pub fn to_matrix(&self) -> Result<SparseMatrix, String> {
        let ring: Ring = self.ring.parse().map_err(|e| format!("{e}"))?;
        let entries = self
            .entries
            .iter()
            .map(|(r, c, v)| Ok((*r, *c, ring.parse(v).map_err(|e| format!("{e}"))?)))
            .collect::<Result<Vec<_>, String>>()?;
        SparseMatrix::from_entries(&ring, self.dim, entries).map_err(|e| format!("{e}"))
    }
}
