//! Sub-bundle analysis for a family `F ⊆ X × k^n`: per-fiber reducedness,
//! the global constant-rank / kernel certificate, closure of locally closed
//! families, and kernel-presentation verification.
//!
//! The fiber test at a base point `x`: the defining equations specialize to
//! an ideal in the fiber variables, the tangent space at the origin is
//! `ker J(x)` for the Jacobian of fiber-linear parts, and the fiber is a
//! reduced linear subspace exactly when its ideal coincides with the linear
//! ideal of that kernel.

use crate::coeff::{FieldElement, FieldSpec};
use crate::ideal::{matrix_minors, Dimension, Ideal, IdealError};
use crate::poly::{Ctx, Monomial, Polynomial, VariableContext};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BundleError {
    #[error("point {0} does not lie on the base variety")]
    PointNotOnBase(String),
    #[error("invalid family: {0}")]
    Validation(String),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Poly(#[from] crate::poly::PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Declared,
    Parametrized { param: String, value: FieldElement },
}

/// A point of the base variety, rational over the coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasePoint {
    pub coords: Vec<FieldElement>,
    pub provenance: Provenance,
}

impl fmt::Display for BasePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", coords.join(", "))?;
        if let Provenance::Parametrized { param, value } = &self.provenance {
            write!(f, " [{param} = {value}]")?;
        }
        Ok(())
    }
}

/// A curve of base points given by polynomials in one parameter, probed at
/// explicit sample values; this is how non-rational loci (e.g. the generic
/// point of the cusp) are sampled without leaving the coefficient field.
#[derive(Debug, Clone)]
pub struct Parametrization {
    pub param: String,
    /// One polynomial per base variable, in the one-variable parameter context.
    pub images: Vec<Polynomial>,
    pub samples: Vec<FieldElement>,
}

/// The family data: base variety `X`, trivial bundle `E = X × k^n`,
/// subfamily `F`, and the expected fiber dimension `d`.
#[derive(Debug, Clone)]
pub struct FamilySpec {
    pub field: FieldSpec,
    /// All variables, base block then fiber block.
    pub context: Ctx,
    pub base_context: Ctx,
    pub fiber_context: Ctx,
    pub base_ideal: Ideal,
    pub family_ideal: Ideal,
    pub expected_dim: usize,
    pub points: Vec<BasePoint>,
    pub parametrizations: Vec<Parametrization>,
    /// Constructor normalizations worth surfacing (e.g. base generators
    /// added to the family ideal).
    pub notices: Vec<String>,
}

impl FamilySpec {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        field: FieldSpec,
        context: Ctx,
        base_generators: Vec<Polynomial>,
        family_generators: Vec<Polynomial>,
        expected_dim: usize,
        declared_points: Vec<Vec<FieldElement>>,
        parametrizations: Vec<Parametrization>,
    ) -> Result<FamilySpec, BundleError> {
        let split = context
            .block_split()
            .ok_or_else(|| BundleError::Validation("context has no base/fiber split".into()))?;
        let n = context.len() - split;
        if expected_dim > n {
            return Err(BundleError::Validation(format!(
                "expected fiber dimension {expected_dim} exceeds fiber rank {n}"
            )));
        }
        let base_context =
            VariableContext::new(context.names()[..split].to_vec()).map_err(crate::poly::PolyError::from)?;
        let fiber_context =
            VariableContext::new(context.names()[split..].to_vec()).map_err(crate::poly::PolyError::from)?;

        let base_ideal = Ideal::new(&base_context, field, base_generators);
        let mut family_gens = family_generators;
        let mut notices = Vec::new();
        {
            let probe = Ideal::new(&context, field, family_gens.clone());
            for g in base_ideal.generators() {
                let lifted = g.transport(&context)?;
                if !probe.contains(&lifted)? {
                    notices.push(format!(
                        "base generator {g} added to the family ideal"
                    ));
                    family_gens.push(lifted);
                }
            }
        }
        let family_ideal = Ideal::new(&context, field, family_gens);

        let mut points = Vec::new();
        for coords in declared_points {
            if coords.len() != split {
                return Err(BundleError::Validation(format!(
                    "point has {} coordinates, base has {} variables",
                    coords.len(),
                    split
                )));
            }
            let pt = BasePoint {
                coords,
                provenance: Provenance::Declared,
            };
            check_on_base(&base_ideal, &pt)?;
            points.push(pt);
        }

        for pz in &parametrizations {
            if pz.images.len() != split {
                return Err(BundleError::Validation(format!(
                    "parametrization `{}` must give one polynomial per base variable",
                    pz.param
                )));
            }
            // Images must satisfy the base ideal identically in the parameter.
            for g in base_ideal.generators() {
                if !g.substitute_full(&pz.images).is_zero() {
                    return Err(BundleError::Validation(format!(
                        "parametrization `{}` does not satisfy base generator {g}",
                        pz.param
                    )));
                }
            }
            for v in &pz.samples {
                let coords: Vec<FieldElement> =
                    pz.images.iter().map(|img| img.eval(&[v.clone()])).collect();
                let pt = BasePoint {
                    coords,
                    provenance: Provenance::Parametrized {
                        param: pz.param.clone(),
                        value: v.clone(),
                    },
                };
                check_on_base(&base_ideal, &pt)?;
                points.push(pt);
            }
        }

        Ok(FamilySpec {
            field,
            context,
            base_context,
            fiber_context,
            base_ideal,
            family_ideal,
            expected_dim,
            points,
            parametrizations,
            notices,
        })
    }

    pub fn base_rank(&self) -> usize {
        self.context.block_split().expect("split checked")
    }

    pub fn fiber_rank(&self) -> usize {
        self.context.len() - self.base_rank()
    }
}

fn check_on_base(base_ideal: &Ideal, pt: &BasePoint) -> Result<(), BundleError> {
    for g in base_ideal.generators() {
        if !g.eval(&pt.coords).is_zero() {
            return Err(BundleError::PointNotOnBase(pt.to_string()));
        }
    }
    Ok(())
}

/// `s × n` matrix of base-variable polynomials: entry `(i, j)` is
/// `∂f_i/∂y_j` at `y = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobianMatrix {
    pub entries: Vec<Vec<Polynomial>>,
}

impl JacobianMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map(|r| r.len()).unwrap_or(0)
    }

    /// Scalar matrix at a base point.
    pub fn at(&self, pt: &BasePoint) -> Vec<Vec<FieldElement>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| e.eval(&pt.coords)).collect())
            .collect()
    }
}

pub fn jacobian_at_zero(spec: &FamilySpec) -> Result<JacobianMatrix, BundleError> {
    let entries = spec
        .family_ideal
        .generators()
        .iter()
        .map(|g| g.fiber_linear_part(&spec.base_context))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(JacobianMatrix { entries })
}

/// The fiber's natural scheme structure at `pt`: defining equations
/// specialized at the point, in the fiber-only context.
pub fn fiber_ideal(spec: &FamilySpec, pt: &BasePoint) -> Result<Ideal, BundleError> {
    check_on_base(&spec.base_ideal, pt)?;
    let mut assignment = BTreeMap::new();
    for (i, c) in pt.coords.iter().enumerate() {
        assignment.insert(i, Polynomial::constant(&spec.context, c.clone()));
    }
    let gens = spec
        .family_ideal
        .generators()
        .iter()
        .map(|g| {
            g.substitute(&assignment)
                .transport(&spec.fiber_context)
                .expect("base variables specialized away")
        })
        .collect();
    Ok(Ideal::new(&spec.fiber_context, spec.field, gens))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiberStatus {
    ReducedLinear,
    NonReduced,
    NotScalarClosed,
    DimensionMismatch,
}

impl fmt::Display for FiberStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FiberStatus::ReducedLinear => "reduced-linear",
            FiberStatus::NonReduced => "non-reduced",
            FiberStatus::NotScalarClosed => "not-scalar-closed",
            FiberStatus::DimensionMismatch => "dimension-mismatch",
        };
        write!(f, "{s}")
    }
}

/// Per-point scheme analysis of the fiber.
#[derive(Debug, Clone)]
pub struct FiberReport {
    pub point: BasePoint,
    pub fiber_gb: Vec<Polynomial>,
    pub fiber_dim: Dimension,
    pub tangent_dim: usize,
    pub cone_ok: bool,
    pub reduced: bool,
    pub tangent_basis: Vec<Vec<FieldElement>>,
    pub status: FiberStatus,
}

/// Reduced row echelon form over the exact field; returns the nonzero rows.
pub fn row_reduce(mut m: Vec<Vec<FieldElement>>) -> Vec<Vec<FieldElement>> {
    let rows = m.len();
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut pivot_row = 0usize;
    for col in 0..cols {
        let Some(r) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, r);
        let inv = m[pivot_row][col].inv().expect("pivot nonzero");
        for c in col..cols {
            m[pivot_row][c] = m[pivot_row][c].mul(&inv);
        }
        for r2 in 0..rows {
            if r2 != pivot_row && !m[r2][col].is_zero() {
                let factor = m[r2][col].clone();
                for c in col..cols {
                    let delta = m[pivot_row][c].mul(&factor);
                    m[r2][c] = m[r2][c].sub(&delta);
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    m.truncate(pivot_row);
    m
}

/// Basis of the kernel of a row-reduced matrix (one vector per free column).
pub fn kernel_basis(rref: &[Vec<FieldElement>], cols: usize, field: FieldSpec) -> Vec<Vec<FieldElement>> {
    let mut pivot_of_row = Vec::new();
    for row in rref {
        let p = row.iter().position(|c| !c.is_zero()).expect("nonzero row");
        pivot_of_row.push(p);
    }
    let pivots: BTreeSet<usize> = pivot_of_row.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![field.zero(); cols];
        v[free] = field.one();
        for (ri, &p) in pivot_of_row.iter().enumerate() {
            v[p] = rref[ri][free].neg();
        }
        basis.push(v);
    }
    basis
}

fn linear_form(ctx: &Ctx, coeffs: &[FieldElement], field: FieldSpec) -> Polynomial {
    Polynomial::from_terms(
        ctx,
        field,
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (Monomial::var(ctx.len(), i), c.clone())),
    )
}

/// Runs the reducedness test of the fiber over `pt`.
pub fn analyze_fiber(spec: &FamilySpec, pt: &BasePoint) -> Result<FiberReport, BundleError> {
    let n = spec.fiber_rank();
    let ifib = fiber_ideal(spec, pt)?;
    let gb = ifib.groebner_basis()?.to_vec();
    let fiber_dim = ifib.krull_dimension()?;

    let jac = jacobian_at_zero(spec)?;
    let rref = row_reduce(jac.at(pt));
    let rank = rref.len();
    let tangent_dim = n - rank;
    let tangent_basis = kernel_basis(&rref, n, spec.field);

    // Cone test: V(I_fib) is closed under scalar multiplication iff every
    // homogeneous component of every GB element vanishes on it.
    let mut cone_ok = true;
    'outer: for g in &gb {
        for comp in g.homogeneous_components() {
            if comp.is_zero() {
                continue;
            }
            if !ifib.radical_contains(&comp)? {
                cone_ok = false;
                break 'outer;
            }
        }
    }

    let status = if !cone_ok {
        FiberStatus::NotScalarClosed
    } else {
        match fiber_dim {
            Dimension::Empty => FiberStatus::DimensionMismatch,
            Dimension::Dim(d) if d != spec.expected_dim => FiberStatus::DimensionMismatch,
            Dimension::Dim(d) => {
                if tangent_dim > d {
                    // Under the constant-dimension hypothesis this is exactly
                    // a non-reduced fiber; it could alternatively signal a
                    // non-linear fiber, which the verdict narrative notes.
                    FiberStatus::NonReduced
                } else if tangent_dim < d {
                    FiberStatus::DimensionMismatch
                } else {
                    // The fiber set equals ker J(pt); reduced iff the fiber
                    // ideal equals the linear ideal of the kernel.
                    let forms: Vec<Polynomial> = rref
                        .iter()
                        .map(|row| linear_form(&spec.fiber_context, row, spec.field))
                        .collect();
                    let lin = Ideal::new(&spec.fiber_context, spec.field, forms.clone());
                    let mut equal = true;
                    for g in &gb {
                        if !lin.contains(g)? {
                            equal = false;
                            break;
                        }
                    }
                    if equal {
                        for f in &forms {
                            if !ifib.contains(f)? {
                                equal = false;
                                break;
                            }
                        }
                    }
                    if equal {
                        FiberStatus::ReducedLinear
                    } else {
                        FiberStatus::NonReduced
                    }
                }
            }
        }
    };

    let reduced =
        status == FiberStatus::ReducedLinear && fiber_dim == Dimension::Dim(spec.expected_dim);

    Ok(FiberReport {
        point: pt.clone(),
        fiber_gb: gb,
        fiber_dim,
        tangent_dim,
        cone_ok,
        reduced,
        tangent_basis,
        status,
    })
}

/// Whole-base rank certificate for the bundle map `θ(x, y) = (x, J(x)y)`.
#[derive(Debug, Clone)]
pub struct GlobalCertificate {
    /// All `(n−d+1)`-minors of `J` lie in `√(base ideal)`: rank ≤ n−d on X.
    pub rank_upper_ok: bool,
    /// `V(base ideal + ⟨(n−d)-minors⟩)` is empty: rank ≥ n−d on X.
    pub rank_lower_ok: bool,
    /// The family ideal and `base ideal + ⟨rows of J·y⟩` cut out the same
    /// variety (mutual radical membership of generators).
    pub kernel_match_ok: bool,
    /// When the lower bound fails: ideal whose variety is the rank-drop locus.
    pub witness: Option<Ideal>,
}

impl GlobalCertificate {
    pub fn all_ok(&self) -> bool {
        self.rank_upper_ok && self.rank_lower_ok && self.kernel_match_ok
    }
}

pub fn global_certificate(spec: &FamilySpec) -> Result<GlobalCertificate, BundleError> {
    let n = spec.fiber_rank();
    let r = n - spec.expected_dim;
    let jac = jacobian_at_zero(spec)?;
    let s = jac.rows();

    let rank_upper_ok = if r + 1 > s.min(n) || s == 0 {
        true
    } else {
        let mut ok = true;
        for minor in matrix_minors(&jac.entries, r + 1)? {
            if !spec.base_ideal.radical_contains(&minor)? {
                ok = false;
                break;
            }
        }
        ok
    };

    let (rank_lower_ok, witness) = if r == 0 {
        (true, None)
    } else if r > s.min(n) {
        // J can never attain rank r; the bound holds only on an empty base.
        let empty = spec.base_ideal.is_empty_variety()?;
        let w = if empty {
            None
        } else {
            Some(spec.base_ideal.clone())
        };
        (empty, w)
    } else {
        let mut gens = spec.base_ideal.generators().to_vec();
        gens.extend(matrix_minors(&jac.entries, r)?);
        let drop_locus = Ideal::new(&spec.base_context, spec.field, gens);
        let empty = drop_locus.is_empty_variety()?;
        let w = if empty { None } else { Some(drop_locus) };
        (empty, w)
    };

    // Kernel match: F and ker θ agree as subvarieties of E.
    let split = spec.base_rank();
    let mut theta_gens: Vec<Polynomial> = spec
        .base_ideal
        .generators()
        .iter()
        .map(|g| g.transport(&spec.context))
        .collect::<Result<_, _>>()?;
    let mut rows_jy = Vec::new();
    for row in &jac.entries {
        let mut acc = Polynomial::zero(&spec.context, spec.field);
        for (j, entry) in row.iter().enumerate() {
            let e = entry.transport(&spec.context)?;
            let y = Polynomial::variable(&spec.context, split + j, spec.field);
            acc = acc.add(&e.mul(&y));
        }
        rows_jy.push(acc);
    }
    theta_gens.extend(rows_jy.iter().cloned());
    let theta_ideal = Ideal::new(&spec.context, spec.field, theta_gens);

    let mut kernel_match_ok = true;
    for g in spec.family_ideal.generators() {
        if !theta_ideal.radical_contains(g)? {
            kernel_match_ok = false;
            break;
        }
    }
    if kernel_match_ok {
        for row in &rows_jy {
            if !spec.family_ideal.radical_contains(row)? {
                kernel_match_ok = false;
                break;
            }
        }
    }

    Ok(GlobalCertificate {
        rank_upper_ok,
        rank_lower_ok,
        kernel_match_ok,
        witness,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictKind {
    Subbundle,
    NotSubbundle,
    HypothesisViolated,
    Inconclusive,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VerdictKind::Subbundle => "SUB-BUNDLE",
            VerdictKind::NotSubbundle => "NOT A SUB-BUNDLE",
            VerdictKind::HypothesisViolated => "HYPOTHESIS VIOLATED",
            VerdictKind::Inconclusive => "INCONCLUSIVE",
        };
        write!(f, "{s}")
    }
}

/// The final classification with its supporting evidence.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub fibers: Vec<FiberReport>,
    pub certificate: GlobalCertificate,
    pub narrative: String,
}

fn render_ideal(gens: &[Polynomial]) -> String {
    if gens.is_empty() {
        return "<0>".to_string();
    }
    let parts: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    format!("<{}>", parts.join(", "))
}

pub fn verdict(spec: &FamilySpec) -> Result<Verdict, BundleError> {
    let fibers: Vec<FiberReport> = spec
        .points
        .iter()
        .map(|pt| analyze_fiber(spec, pt))
        .collect::<Result<_, _>>()?;
    let certificate = global_certificate(spec)?;

    if let Some(bad) = fibers.iter().find(|f| {
        matches!(
            f.status,
            FiberStatus::NotScalarClosed | FiberStatus::DimensionMismatch
        )
    }) {
        let kind = VerdictKind::HypothesisViolated;
        let narrative = format!(
            "fibre at {} is {} — the family does not satisfy the constant-dimension \
             linear-fibre hypothesis",
            bad.point, bad.status
        );
        return Ok(Verdict {
            kind,
            fibers,
            certificate,
            narrative,
        });
    }

    if let Some(bad) = fibers.iter().find(|f| f.status == FiberStatus::NonReduced) {
        let narrative = format!(
            "non-reduced fibre at {}: ideal {} (under the constant-dimension hypothesis \
             a tangent space strictly larger than the fibre means the fibre scheme is \
             not reduced; it could alternatively signal a non-linear fibre)",
            bad.point,
            render_ideal(&bad.fiber_gb)
        );
        return Ok(Verdict {
            kind: VerdictKind::NotSubbundle,
            fibers,
            certificate,
            narrative,
        });
    }

    if certificate.all_ok() {
        let narrative = "every sampled fibre is a reduced linear subspace and the \
                         constant-rank certificate holds: F is the kernel of the bundle \
                         homomorphism theta(x, y) = (x, J(x)y)"
            .to_string();
        return Ok(Verdict {
            kind: VerdictKind::Subbundle,
            fibers,
            certificate,
            narrative,
        });
    }

    // Certificate failed with all sampled fibers reduced: demonstrable only
    // if a sampled point lies in the rank-drop witness variety.
    if let Some(w) = &certificate.witness {
        if let Some(pt) = spec
            .points
            .iter()
            .find(|pt| w.generators().iter().all(|g| g.eval(&pt.coords).is_zero()))
        {
            let narrative = format!(
                "rank of J drops at sampled point {pt}, so F cannot be the kernel of a \
                 constant-rank bundle homomorphism"
            );
            return Ok(Verdict {
                kind: VerdictKind::NotSubbundle,
                fibers,
                certificate,
                narrative,
            });
        }
    }

    let witness_txt = certificate
        .witness
        .as_ref()
        .map(|w| render_ideal(w.generators()))
        .unwrap_or_else(|| "<none>".to_string());
    let narrative = format!(
        "all sampled fibres are reduced linear subspaces but the global certificate \
         failed (rank_upper_ok={}, rank_lower_ok={}, kernel_match_ok={}); extend the \
         sampling over the witness ideal {witness_txt}",
        certificate.rank_upper_ok, certificate.rank_lower_ok, certificate.kernel_match_ok
    );
    Ok(Verdict {
        kind: VerdictKind::Inconclusive,
        fibers,
        certificate,
        narrative,
    })
}

/// Checks that `claimed` generates the kernel of the ring map determined by
/// `images` (source variable ↦ polynomial in target variables), via
/// elimination of the (renamed) target variables from the graph ideal.
pub fn verify_kernel_presentation(
    images: &[(String, Polynomial)],
    claimed: &[Polynomial],
) -> Result<bool, BundleError> {
    let field = images
        .first()
        .map(|(_, p)| p.field())
        .ok_or_else(|| BundleError::Validation("empty image list".into()))?;
    let target_ctx = images[0].1.ctx().clone();
    let source_names: Vec<String> = images.iter().map(|(n, _)| n.clone()).collect();

    // Rename target variables that collide with source names; renamed names
    // use the reserved `_` prefix, which the file parser forbids for users.
    let mut joint_names = source_names.clone();
    let mut target_map = Vec::new(); // target index -> joint index
    for tname in target_ctx.names() {
        let fresh = if source_names.contains(tname) {
            let mut cand = format!("_{tname}");
            let mut k = 1;
            while joint_names.contains(&cand) {
                k += 1;
                cand = format!("_{tname}{k}");
            }
            cand
        } else {
            tname.clone()
        };
        target_map.push(joint_names.len());
        joint_names.push(fresh);
    }
    let joint_ctx = VariableContext::new(joint_names)?;

    let remap_target = |p: &Polynomial| -> Polynomial {
        Polynomial::from_terms(
            &joint_ctx,
            field,
            p.terms().map(|(m, c)| {
                let mut exps = vec![0u32; joint_ctx.len()];
                for i in m.support() {
                    exps[target_map[i]] = m.exponent(i);
                }
                (Monomial::from_exponents(exps), c.clone())
            }),
        )
    };

    let mut graph_gens = Vec::new();
    for (name, img) in images {
        let src_idx = joint_ctx.index_of(name).expect("source name present");
        let src = Polynomial::variable(&joint_ctx, src_idx, field);
        graph_gens.push(src.sub(&remap_target(img)));
    }
    let graph = Ideal::new(&joint_ctx, field, graph_gens);

    let kill: BTreeSet<String> = target_map
        .iter()
        .map(|&j| joint_ctx.name(j).to_string())
        .collect();
    let kernel = graph.eliminate(&kill)?;

    let source_ctx = kernel.ctx().clone();
    let claimed_gens: Vec<Polynomial> = claimed
        .iter()
        .map(|c| c.transport(&source_ctx))
        .collect::<Result<_, _>>()?;
    let claimed_ideal = Ideal::new(&source_ctx, field, claimed_gens);
    Ok(kernel.equal(&claimed_ideal)?)
}

/// Substitution oracle for the sound half of a kernel claim: every claimed
/// generator must vanish identically under the images. Independent of the
/// Groebner machinery.
pub fn kernel_claim_vanishes(images: &[(String, Polynomial)], claimed: &[Polynomial]) -> bool {
    claimed.iter().all(|c| {
        let imgs: Vec<Polynomial> = c
            .ctx()
            .names()
            .iter()
            .map(|n| {
                images
                    .iter()
                    .find(|(name, _)| name == n)
                    .map(|(_, p)| p.clone())
                    .expect("claimed polynomial uses only source variables")
            })
            .collect();
        c.substitute_full(&imgs).is_zero()
    })
}

/// Result of closing up the locally closed family `V(I_F) ∖ V(g)`.
#[derive(Debug, Clone)]
pub struct ClosureReport {
    pub closure: Ideal,
    pub fibers_match: bool,
    pub note: Option<String>,
}

pub fn closure_check(spec: &FamilySpec, g: &Polynomial) -> Result<ClosureReport, BundleError> {
    let closure = spec.family_ideal.saturate(g)?;
    if closure.is_empty_variety()? {
        return Ok(ClosureReport {
            closure,
            fibers_match: false,
            note: Some("EmptyFamily: the saturating polynomial vanishes on all of F".into()),
        });
    }
    let closure_spec = FamilySpec {
        family_ideal: closure.clone(),
        ..spec.clone()
    };
    let mut fibers_match = true;
    'pts: for pt in &spec.points {
        let a = fiber_ideal(spec, pt)?;
        let b = fiber_ideal(&closure_spec, pt)?;
        for gen in a.generators() {
            if !b.radical_contains(gen)? {
                fibers_match = false;
                break 'pts;
            }
        }
        for gen in b.generators() {
            if !a.radical_contains(gen)? {
                fibers_match = false;
                break 'pts;
            }
        }
    }
    Ok(ClosureReport {
        closure,
        fibers_match,
        note: None,
    })
}
