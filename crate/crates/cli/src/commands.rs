use std::fmt::{Display, Write as _};
use std::io::Write;
use std::path::Path;
use std::sync::Arc;

use serde::Serialize;

use chevalley::chevgroup::{self, GroupContext, GroupError};
use chevalley::exactring::{Ring, RingValue, SparseMatrix};
use chevalley::liealg::{self, LieGenSet};
use chevalley::minuscule::WeightBasis;
use chevalley::report::CheckReport;
use chevalley::rootdata::{Family, LieType, RootDatum};

use crate::document::MatrixDocument;
use crate::{ExportFormat, Failure, Suite, Target};

fn usage(e: impl Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn group_failure(e: GroupError) -> Failure {
    match e {
        GroupError::CapExceeded { .. } => Failure::CapExceeded(e.to_string()),
        GroupError::NotUnipotent
        | GroupError::FactorizationFailed(_)
        | GroupError::Inconsistent(_) => Failure::Verification(e.to_string()),
        _ => Failure::Usage(e.to_string()),
    }
}

fn lie_type(t: &Target) -> Result<LieType, Failure> {
    let name = t.lie_type.trim();
    if name.len() > 1 {
        let parsed: LieType = name.parse().map_err(usage)?;
        match t.rank {
            Some(r) if r != parsed.rank() => {
                Err(usage(format!("--type {name} conflicts with --rank {r}")))
            }
            _ => Ok(parsed),
        }
    } else {
        let family: Family = name.parse().map_err(usage)?;
        let rank = t
            .rank
            .ok_or_else(|| usage(format!("--type {name} needs --rank")))?;
        LieType::new(family, rank).map_err(usage)
    }
}

fn basis(t: &Target) -> Result<WeightBasis, Failure> {
    let lt = lie_type(t)?;
    let datum = Arc::new(RootDatum::build(lt).map_err(usage)?);
    let mut nodes = Vec::with_capacity(t.nodes.len());
    for &k in &t.nodes {
        if k == 0 || k > lt.rank() {
            return Err(usage(format!(
                "node {k} is outside 1..={} for {lt}",
                lt.rank()
            )));
        }
        nodes.push(k - 1);
    }
    WeightBasis::build(datum, &nodes).map_err(usage)
}

fn ring(t: &Target) -> Result<Ring, Failure> {
    t.ring.as_deref().unwrap_or("int").parse().map_err(usage)
}

fn context(t: &Target) -> Result<GroupContext, Failure> {
    GroupContext::new(basis(t)?, ring(t)?).map_err(group_failure)
}

/// Writes to stdout, treating a closed pipe as success.
fn emit(text: &str) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(usage(e)),
        _ => Ok(()),
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let mut s = serde_json::to_string(value).map_err(usage)?;
    s.push('\n');
    emit(&s)
}

#[derive(Serialize)]
struct OrbitDocument<'a> {
    #[serde(rename = "type")]
    lie_type: String,
    rank: usize,
    nodes: &'a [usize],
    size: usize,
    weights: Vec<&'a [i64]>,
}

pub fn orbit(t: &Target) -> Result<(), Failure> {
    let b = basis(t)?;
    let weights: Vec<&[i64]> = b.weights().iter().map(|w| w.coords()).collect();
    print_json(&OrbitDocument {
        lie_type: b.datum().lie_type().to_string(),
        rank: b.datum().rank(),
        nodes: &t.nodes,
        size: weights.len(),
        weights,
    })
}

/// The parameter used for `h_i`: the least primitive root over a prime
/// field, otherwise `−1`.
fn torus_parameter(ctx: &GroupContext) -> RingValue {
    match ctx.ring() {
        Ring::PrimeField(_) => ctx.value(ctx.ring().primitive_root().expect("prime field") as i64),
        _ => ctx.value(-1),
    }
}

fn root_label(ctx: &GroupContext, alpha: usize) -> String {
    let e: Vec<String> = ctx
        .datum()
        .root(alpha)
        .simple_expansion
        .iter()
        .map(|c| c.to_string())
        .collect();
    format!("x_root[{}]", e.join(","))
}

/// Named generator matrices: `x_i(1)`, `y_i(1)`, `n_i(1)`, `h_i(g)`.
fn named_generators(
    ctx: &GroupContext,
) -> Result<Vec<(String, Option<String>, SparseMatrix)>, Failure> {
    let one = ctx.value(1);
    let g = torus_parameter(ctx);
    let mut out = Vec::new();
    for i in 0..ctx.rank() {
        let k = i + 1;
        let gf = group_failure;
        out.push((
            format!("x_{k}"),
            Some(one.to_string()),
            ctx.gen_x(i, &one).map_err(gf)?.into_matrix(),
        ));
        out.push((
            format!("y_{k}"),
            Some(one.to_string()),
            ctx.gen_y(i, &one).map_err(gf)?.into_matrix(),
        ));
        out.push((
            format!("n_{k}"),
            Some(one.to_string()),
            ctx.gen_n(i, &one).map_err(gf)?.into_matrix(),
        ));
        out.push((
            format!("h_{k}"),
            Some(g.to_string()),
            ctx.gen_h(i, &g).map_err(gf)?.into_matrix(),
        ));
    }
    Ok(out)
}

pub fn generators(t: &Target) -> Result<(), Failure> {
    let ctx = context(t)?;
    let one = ctx.value(1);
    let mut docs: Vec<MatrixDocument> = named_generators(&ctx)?
        .into_iter()
        .map(|(name, param, m)| MatrixDocument::new(&m, ctx.basis(), name, param))
        .collect();
    for alpha in 0..ctx.datum().roots().len() {
        let m = ctx.gen_x_root(alpha, &one).map_err(group_failure)?;
        docs.push(MatrixDocument::new(
            m.matrix(),
            ctx.basis(),
            root_label(&ctx, alpha),
            Some(one.to_string()),
        ));
    }
    print_json(&docs)
}

fn torus_suite(ctx: &GroupContext) -> Result<CheckReport, GroupError> {
    let ring = ctx.ring();
    let units: Vec<RingValue> = match ring.units() {
        Some(us) => us
            .into_iter()
            .take(6)
            .map(|u| RingValue::new(ring, u))
            .collect::<Result<_, _>>()?,
        None => [1, -1, 2, 3]
            .iter()
            .map(|&k| ctx.value(k))
            .filter(|v| v.try_invert().is_some())
            .collect(),
    };
    let params: Vec<RingValue> = [0, 1, 2].iter().map(|&k| ctx.value(k)).collect();
    let n = ctx.rank();
    let mut report = CheckReport::new();
    for i in 0..n {
        for t in &units {
            let mut conj = true;
            let mut perfect = true;
            for u in &params {
                for alpha in 0..ctx.datum().roots().len() {
                    conj &= chevgroup::verify_torus_conjugation(ctx, i, alpha, t, u)?;
                }
                perfect &= chevgroup::perfectness_identity(ctx, i, t, u)?;
            }
            report.record(
                format!(
                    "h_{}({t}) x_a(u) h_{}({t})^-1 = x_a(u t^<a,a_{}>)",
                    i + 1,
                    i + 1,
                    i + 1
                ),
                conj,
            );
            report.record(
                format!(
                    "h_{}({t}) commutator with x_{}(u) = x_{}(u(t^2-1))",
                    i + 1,
                    i + 1,
                    i + 1
                ),
                perfect,
            );
            let mut norm = true;
            for j in 0..n {
                norm &= chevgroup::verify_n_h_normalization(ctx, i, j, t)?;
            }
            report.record(format!("n_{} normalizes the torus at t = {t}", i + 1), norm);
        }
    }
    for t in &units {
        let tv = vec![t.clone(); n];
        // Cross-checks the matrix and weight criteria; errors on disagreement.
        chevgroup::torus_kernel_test(ctx, &tv)?;
        report.record(
            format!("torus kernel criteria agree at t = ({t}, ...)"),
            true,
        );
    }
    report.record(
        "h(1, ..., 1) = 1",
        chevgroup::torus_kernel_test(ctx, &vec![ctx.value(1); n])?,
    );
    Ok(report)
}

fn structure_suite(gens: &LieGenSet) -> Result<CheckReport, Failure> {
    let mut report = liealg::verify_all_braids(gens);
    let n = gens.rank();
    for i in 0..n {
        for j in 0..n {
            report.record(
                format!(
                    "n_{}^-1 h_{} n_{} = h_{} - a_{}{} h_{}",
                    i + 1,
                    j + 1,
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1,
                    i + 1
                ),
                liealg::verify_cartan_conjugation(gens, i, j),
            );
        }
    }
    for rv in gens.root_vectors() {
        report.record(
            format!("root vector {} well formed", rv.index),
            liealg::check_root_vector(gens, rv.index, &rv.matrix),
        );
    }
    Ok(report)
}

pub fn verify(t: &Target, suite: Suite, cap: usize) -> Result<(), Failure> {
    let b = basis(t)?;
    let gens = Arc::new(LieGenSet::new(b));
    let run = |s: Suite| suite == Suite::All || suite == s;
    let mut report = CheckReport::new();
    if run(Suite::Serre) {
        report.merge(liealg::verify_serre(&gens));
    }
    if run(Suite::Braid) {
        report.merge(structure_suite(&gens)?);
    }
    if run(Suite::Commutator) {
        let poly = Ring::polynomial(&["t", "u"]).map_err(usage)?;
        let ctx = GroupContext::from_generators(gens.clone(), poly).map_err(group_failure)?;
        report.merge(chevgroup::verify_commutators(&ctx).map_err(group_failure)?);
    }
    if run(Suite::Torus) {
        let ctx = GroupContext::from_generators(gens.clone(), ring(t)?).map_err(group_failure)?;
        report.merge(torus_suite(&ctx).map_err(group_failure)?);
    }
    if run(Suite::Weyl) {
        let ctx =
            GroupContext::from_generators(gens.clone(), Ring::Integers).map_err(group_failure)?;
        let (order, distinct) = chevgroup::weyl_lift_patterns(&ctx, cap).map_err(group_failure)?;
        report.record(
            format!("Weyl group of order {order} lifts to {distinct} distinct torus cosets"),
            order == distinct,
        );
    }
    let failed = report.failures().count();
    emit(&format!(
        "{report}{} checks, {failed} failed\n",
        report.len()
    ))?;
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "{failed} of {} checks failed",
            report.len()
        )))
    }
}

#[derive(Serialize)]
struct CenterElement<'a> {
    /// `x_i` with `t_i = generator^{x_i}`.
    exponents: &'a [u64],
    diagonal: Vec<String>,
}

#[derive(Serialize)]
struct CenterDocument<'a> {
    ring: String,
    generator: u64,
    order: usize,
    invariant_factors: &'a [u64],
    elements: Vec<CenterElement<'a>>,
}

pub fn center(t: &Target) -> Result<(), Failure> {
    let ctx = context(t)?;
    let z = chevgroup::center(&ctx).map_err(group_failure)?;
    let ring = ctx.ring();
    let elements = z
        .elements
        .iter()
        .zip(&z.parameterizations)
        .map(|(e, x)| CenterElement {
            exponents: x,
            diagonal: e
                .matrix()
                .diagonal_entries()
                .iter()
                .map(|v| ring.format(v))
                .collect(),
        })
        .collect();
    print_json(&CenterDocument {
        ring: ring.to_string(),
        generator: z.generator,
        order: z.order,
        invariant_factors: &z.invariant_factors,
        elements,
    })
}

pub fn enumerate(t: &Target, cap: usize) -> Result<(), Failure> {
    let ctx = context(t)?;
    let rec = chevgroup::enumerate_group(&ctx, cap).map_err(group_failure)?;
    print_json(&rec)?;
    if rec.completed {
        Ok(())
    } else {
        Err(Failure::CapExceeded(format!(
            "stopped at the cap of {cap} elements"
        )))
    }
}

#[derive(Serialize)]
struct Factor<'a> {
    /// Coefficients of the root in the simple roots.
    root: &'a [i64],
    coefficient: String,
}

#[derive(Serialize)]
struct FactorDocument<'a> {
    ring: String,
    factors: Vec<Factor<'a>>,
}

pub fn factorize(t: &Target, input: &Path) -> Result<(), Failure> {
    let text =
        std::fs::read_to_string(input).map_err(|e| usage(format!("{}: {e}", input.display())))?;
    let doc: MatrixDocument =
        serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", input.display())))?;
    let m = doc.to_matrix().map_err(usage)?;
    if let Some(r) = &t.ring {
        let given: Ring = r.parse().map_err(usage)?;
        if &given != m.ring() {
            return Err(usage(format!(
                "--ring {given} does not match the document ring {}",
                m.ring()
            )));
        }
    }
    let ctx = GroupContext::new(basis(t)?, m.ring().clone()).map_err(group_failure)?;
    if m.dim() != ctx.dim() {
        return Err(usage(format!(
            "document has dimension {}, module has {}",
            m.dim(),
            ctx.dim()
        )));
    }
    let order: Vec<usize> = ctx.datum().positive_roots().collect();
    let coeffs = chevgroup::unipotent_factorize(&ctx, &m, &order).map_err(group_failure)?;
    let factors = order
        .iter()
        .zip(&coeffs)
        .map(|(&r, c)| Factor {
            root: &ctx.datum().root(r).simple_expansion,
            coefficient: c.to_string(),
        })
        .collect();
    print_json(&FactorDocument {
        ring: ctx.ring().to_string(),
        factors,
    })
}

fn gap_matrix(m: &SparseMatrix) -> String {
    let ring = m.ring();
    let rows: Vec<String> = (0..m.dim())
        .map(|r| {
            let cells: Vec<String> = (0..m.dim()).map(|c| ring.format(&m.entry(r, c))).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

pub fn export(t: &Target, format: ExportFormat) -> Result<(), Failure> {
    let ctx = context(t)?;
    let mut text = String::new();
    match format {
        ExportFormat::Gap => {
            let nodes: Vec<String> = t.nodes.iter().map(|k| k.to_string()).collect();
            writeln!(
                text,
                "# {} nodes {} over {}",
                ctx.datum().lie_type(),
                nodes.join(","),
                ctx.ring()
            )
            .unwrap();
            for (name, param, m) in named_generators(&ctx)? {
                if let Some(p) = param {
                    writeln!(text, "# {name}({p})").unwrap();
                }
                writeln!(text, "{} := {};", name.replace('_', ""), gap_matrix(&m)).unwrap();
            }
        }
    }
    emit(&text)
}
