//! Groebner-basis engine and the ideal-theoretic toolkit: multivariate
//! division, Buchberger, elimination, saturation, radical membership,
//! Krull dimension, ideal equality, emptiness, and matrix minors.

use crate::coeff::FieldSpec;
use crate::poly::{Ctx, Monomial, MonomialOrder, PolyError, Polynomial, VariableContext};
use once_cell::sync::OnceCell;
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error("ideals live in different variable contexts")]
    ContextMismatch,
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("minor size out of range")]
    BadMinorSize,
    #[error("cannot saturate by the zero polynomial")]
    ZeroDivisorPolynomial,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Ceilings for the Buchberger loop and the dimension search. Exceeding one
/// is a reported error, never silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GbLimits {
    pub max_pairs: usize,
    pub max_basis: usize,
    pub max_dim_vars: usize,
}

impl Default for GbLimits {
    fn default() -> Self {
        GbLimits {
            max_pairs: 200_000,
            max_basis: 10_000,
            max_dim_vars: 20,
        }
    }
}

/// Remainder of `f` on division by `basis`: no term of the result is
/// divisible by any basis leading term. Deterministic given basis ordering.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let field = f.field();
    let leads: Vec<(Monomial, crate::coeff::FieldElement)> = basis
        .iter()
        .filter_map(|g| g.leading(order).map(|(m, c)| (m.clone(), c.clone())))
        .collect();
    let mut p = f.clone();
    let mut r = Polynomial::zero(f.ctx(), field);
    while let Some((lm, lc)) = p.leading(order).map(|(m, c)| (m.clone(), c.clone())) {
        let mut reduced = false;
        for (i, (gm, gc)) in leads.iter().enumerate() {
            if basis[i].is_zero() {
                continue;
            }
            if gm.divides(&lm) {
                let qm = gm.quotient_into(&lm);
                let qc = lc.div(gc).expect("leading coefficient nonzero");
                p = p.sub(&basis[i].mul_term(&qm, &qc));
                reduced = true;
                break;
            }
        }
        if !reduced {
            let t = Polynomial::from_terms(f.ctx(), field, [(lm.clone(), lc.clone())]);
            r = r.add(&t);
            p = p.sub(&t);
        }
    }
    r
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (fm, fc) = f.leading(order).expect("nonzero");
    let (gm, gc) = g.leading(order).expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.quotient_into(&l), &fc.inv().expect("nonzero lead"));
    let b = g.mul_term(&gm.quotient_into(&l), &gc.inv().expect("nonzero lead"));
    a.sub(&b)
}

/// Buchberger with normal selection (smallest lcm first), the coprime
/// criterion, and a conservative chain criterion, followed by
/// auto-reduction to the canonical reduced monic basis.
pub fn buchberger(
    generators: &[Polynomial],
    order: &MonomialOrder,
    limits: &GbLimits,
) -> Result<Vec<Polynomial>, IdealError> {
    let mut basis: Vec<Polynomial> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .cloned()
        .collect();
    if basis.is_empty() {
        return Ok(Vec::new());
    }

    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    // Pairs whose S-polynomial was genuinely handled (reduced, or skipped by
    // the independently-sound coprime criterion). Chain skips do not count,
    // which keeps the criterion free of circular justification.
    let mut treated: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pending.insert((i, j));
        }
    }

    let mut processed = 0usize;
    while !pending.is_empty() {
        processed += 1;
        if processed > limits.max_pairs {
            return Err(IdealError::ResourceLimit(format!(
                "more than {} S-pairs processed",
                limits.max_pairs
            )));
        }
        // Normal selection: minimal lcm in the active order.
        let (i, j) = *pending
            .iter()
            .min_by(|(a1, a2), (b1, b2)| {
                let la = lead(&basis[*a1], order).lcm(lead(&basis[*a2], order));
                let lb = lead(&basis[*b1], order).lcm(lead(&basis[*b2], order));
                order.cmp(&la, &lb).then_with(|| (a1, a2).cmp(&(b1, b2)))
            })
            .expect("pending non-empty");
        pending.remove(&(i, j));

        let li = lead(&basis[i], order);
        let lj = lead(&basis[j], order);
        let lij = li.lcm(lj);

        // Coprime leading monomials: S-polynomial reduces to zero.
        if li.mul(lj).map(|m| m == lij).unwrap_or(false) {
            treated.insert((i, j));
            continue;
        }

        // Chain criterion.
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lead(&basis[k], order).divides(&lij)
                && treated.contains(&key(i, k))
                && treated.contains(&key(j, k))
        });
        if chain {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        treated.insert((i, j));
        if !r.is_zero() {
            let t = basis.len();
            if t + 1 > limits.max_basis {
                return Err(IdealError::ResourceLimit(format!(
                    "basis grew past {} elements",
                    limits.max_basis
                )));
            }
            basis.push(r);
            for k in 0..t {
                pending.insert((k, t));
            }
        }
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another's.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let li = lead(&basis[i], order);
            let lj = lead(&basis[j], order);
            if lj.divides(&li) && (li != lj || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut reduced: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(g, _)| g.monic(order))
        .collect();

    // Fully reduce each element against the others; leading monomials are
    // pairwise non-divisible so they survive reduction.
    for i in 0..reduced.len() {
        let others: Vec<Polynomial> = reduced
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        reduced[i] = normal_form(&reduced[i], &others, order).monic(order);
    }

    reduced.sort_by(|a, b| order.cmp(lead(b, order), lead(a, order)));
    Ok(reduced)
}

fn lead<'a>(g: &'a Polynomial, order: &MonomialOrder) -> &'a Monomial {
    g.leading(order).expect("nonzero basis element").0
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Krull dimension of `V(I)` over the algebraic closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    Empty,
    Dim(usize),
}

/// Generator list plus monomial order, with a lazily computed reduced
/// Groebner basis. Immutable after construction; the cache initialization is
/// idempotent, so concurrent readers observe one canonical basis.
#[derive(Debug, Clone)]
pub struct Ideal {
    ctx: Ctx,
    field: FieldSpec,
    generators: Vec<Polynomial>,
    order: MonomialOrder,
    limits: GbLimits,
    gb: OnceCell<Vec<Polynomial>>,
}

impl Ideal {
    pub fn new(ctx: &Ctx, field: FieldSpec, generators: Vec<Polynomial>) -> Ideal {
        Ideal::with_order(ctx, field, generators, MonomialOrder::GrevLex)
    }

    pub fn with_order(
        ctx: &Ctx,
        field: FieldSpec,
        generators: Vec<Polynomial>,
        order: MonomialOrder,
    ) -> Ideal {
        let generators: Vec<Polynomial> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &generators {
            assert!(
                *g.ctx().as_ref() == *ctx.as_ref() && g.field() == field,
                "generator context/field mismatch"
            );
        }
        Ideal {
            ctx: ctx.clone(),
            field,
            generators,
            order,
            limits: GbLimits::default(),
            gb: OnceCell::new(),
        }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn limits(&self) -> &GbLimits {
        &self.limits
    }

    pub fn with_limits(mut self, limits: GbLimits) -> Ideal {
        self.limits = limits;
        self
    }

    /// The reduced monic Groebner basis, computed once and cached.
    pub fn groebner_basis(&self) -> Result<&[Polynomial], IdealError> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = buchberger(&self.generators, &self.order, &self.limits)?;
        Ok(self.gb.get_or_init(|| gb))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, IdealError> {
        if *f.ctx().as_ref() != *self.ctx.as_ref() {
            return Err(IdealError::ContextMismatch);
        }
        if f.is_zero() {
            return Ok(true);
        }
        let gb = self.groebner_basis()?;
        Ok(normal_form(f, gb, &self.order).is_zero())
    }

    /// Rabinowitsch: `f ∈ √I` iff `1 ∈ I + ⟨1 − u·f⟩` for a fresh `u`.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool, IdealError> {
        if *f.ctx().as_ref() != *self.ctx.as_ref() {
            return Err(IdealError::ContextMismatch);
        }
        if f.is_zero() {
            return Ok(true);
        }
        if self.contains(f)? {
            return Ok(true);
        }
        let (ext_ctx, u_idx) = self.extended_ctx("_u");
        let mut gens: Vec<Polynomial> = self
            .generators
            .iter()
            .map(|g| g.transport(&ext_ctx).expect("supercontext"))
            .collect();
        let u = Polynomial::variable(&ext_ctx, u_idx, self.field);
        let one = Polynomial::constant(&ext_ctx, self.field.one());
        let f_ext = f.transport(&ext_ctx).expect("supercontext");
        gens.push(one.sub(&u.mul(&f_ext)));
        let order = MonomialOrder::BlockElim([u_idx].into());
        let j = Ideal::with_order(&ext_ctx, self.field, gens, order).with_limits(self.limits);
        j.is_empty_variety()
    }

    /// Smallest `N ≤ max_power` with `f^N ∈ I`, by iterated normal forms.
    pub fn radical_witness_power(
        &self,
        f: &Polynomial,
        max_power: u32,
    ) -> Result<Option<u32>, IdealError> {
        let gb = self.groebner_basis()?.to_vec();
        let mut pw = Polynomial::constant(&self.ctx, self.field.one());
        for n in 1..=max_power {
            pw = normal_form(&pw.mul(f), &gb, &self.order);
            if pw.is_zero() {
                return Ok(Some(n));
            }
        }
        Ok(None)
    }

    /// `I ∩ k[remaining]`, via a Groebner basis under BlockElim on `kill`;
    /// returned in the smaller context.
    pub fn eliminate(&self, kill: &BTreeSet<String>) -> Result<Ideal, IdealError> {
        let mut kill_idx = BTreeSet::new();
        for name in kill {
            let i = self
                .ctx
                .index_of(name)
                .ok_or_else(|| PolyError::UnknownVariable(name.clone()))?;
            kill_idx.insert(i);
        }
        if kill_idx.is_empty() {
            return Ok(self.clone());
        }
        let remaining: Vec<String> = self
            .ctx
            .names()
            .iter()
            .enumerate()
            .filter(|(i, _)| !kill_idx.contains(i))
            .map(|(_, n)| n.clone())
            .collect();
        let small_ctx = VariableContext::new(remaining)?;
        let order = MonomialOrder::BlockElim(kill_idx.clone());
        let work = Ideal::with_order(&self.ctx, self.field, self.generators.clone(), order)
            .with_limits(self.limits);
        let gb = work.groebner_basis()?;
        let kept: Vec<Polynomial> = gb
            .iter()
            .filter(|g| g.used_variables().is_disjoint(&kill_idx))
            .map(|g| g.transport(&small_ctx).expect("variables survive"))
            .collect();
        Ok(Ideal::new(&small_ctx, self.field, kept).with_limits(self.limits))
    }

    /// `I : g^∞` — adjoin `u`, add `1 − u·g`, eliminate `u`. The result
    /// defines the closure of `V(I) ∖ V(g)`.
    pub fn saturate(&self, g: &Polynomial) -> Result<Ideal, IdealError> {
        if g.is_zero() {
            return Err(IdealError::ZeroDivisorPolynomial);
        }
        if *g.ctx().as_ref() != *self.ctx.as_ref() {
            return Err(IdealError::ContextMismatch);
        }
        let (ext_ctx, u_idx) = self.extended_ctx("_u");
        let mut gens: Vec<Polynomial> = self
            .generators
            .iter()
            .map(|p| p.transport(&ext_ctx).expect("supercontext"))
            .collect();
        let u = Polynomial::variable(&ext_ctx, u_idx, self.field);
        let one = Polynomial::constant(&ext_ctx, self.field.one());
        gens.push(one.sub(&u.mul(&g.transport(&ext_ctx).expect("supercontext"))));
        let big = Ideal::new(&ext_ctx, self.field, gens).with_limits(self.limits);
        let small = big.eliminate(&[ext_ctx.name(u_idx).to_string()].into())?;
        // Re-home in the original context (same variables, same order).
        let gens = small
            .generators
            .iter()
            .map(|p| p.transport(&self.ctx).expect("same variables"))
            .collect();
        Ok(Ideal::with_order(&self.ctx, self.field, gens, self.order.clone())
            .with_limits(self.limits))
    }

    /// True iff `1 ∈ I`, i.e. `V(I) = ∅` over the algebraic closure.
    pub fn is_empty_variety(&self) -> Result<bool, IdealError> {
        let gb = self.groebner_basis()?;
        Ok(gb.iter().any(|g| g.is_constant() && !g.is_zero()))
    }

    /// Dimension of `V(I)`: the maximum cardinality of a variable subset `S`
    /// such that no reduced-GB leading monomial is supported entirely in `S`.
    pub fn krull_dimension(&self) -> Result<Dimension, IdealError> {
        if self.is_empty_variety()? {
            return Ok(Dimension::Empty);
        }
        let n = self.ctx.len();
        if n > self.limits.max_dim_vars {
            return Err(IdealError::ResourceLimit(format!(
                "dimension search over {n} variables exceeds the {} cap",
                self.limits.max_dim_vars
            )));
        }
        let gb = self.groebner_basis()?;
        let supports: Vec<u64> = gb
            .iter()
            .map(|g| {
                let mut bits = 0u64;
                for i in lead(g, &self.order).support() {
                    bits |= 1 << i;
                }
                bits
            })
            .collect();
        let mut best = 0usize;
        for s in 0u64..(1 << n) {
            if supports.iter().any(|&sup| sup & !s == 0) {
                continue;
            }
            best = best.max(s.count_ones() as usize);
        }
        Ok(Dimension::Dim(best))
    }

    /// Canonical-form equality: reduced Groebner bases coincide.
    pub fn equal(&self, other: &Ideal) -> Result<bool, IdealError> {
        if *self.ctx.as_ref() != *other.ctx.as_ref() || self.field != other.field {
            return Err(IdealError::ContextMismatch);
        }
        let a = self.groebner_basis()?;
        if self.order == other.order {
            return Ok(a == other.groebner_basis()?);
        }
        let b = buchberger(other.generators(), &self.order, &self.limits)?;
        Ok(a == b.as_slice())
    }

    fn extended_ctx(&self, stem: &str) -> (Ctx, usize) {
        let mut name = stem.to_string();
        let mut k = 1;
        while self.ctx.index_of(&name).is_some() {
            k += 1;
            name = format!("{stem}{k}");
        }
        let mut names = self.ctx.names().to_vec();
        names.push(name);
        let ctx = VariableContext::new(names).expect("fresh name distinct");
        (ctx, self.ctx.len())
    }
}

/// All `k × k` minor determinants of a polynomial matrix, by cofactor
/// expansion.
pub fn matrix_minors(m: &[Vec<Polynomial>], k: usize) -> Result<Vec<Polynomial>, IdealError> {
    let rows = m.len();
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    if k == 0 || k > rows.min(cols) {
        return Err(IdealError::BadMinorSize);
    }
    let row_sets = combinations(rows, k);
    let col_sets = combinations(cols, k);
    let mut out = Vec::new();
    for rs in &row_sets {
        for cs in &col_sets {
            let sub: Vec<Vec<&Polynomial>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| &m[r][c]).collect())
                .collect();
            out.push(determinant(&sub));
        }
    }
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn determinant(m: &[Vec<&Polynomial>]) -> Polynomial {
    let n = m.len();
    let any = m[0][0];
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Polynomial::zero(any.ctx(), any.field());
    for (j, top) in m[0].iter().enumerate() {
        if top.is_zero() {
            continue;
        }
        let sub: Vec<Vec<&Polynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| *p)
                    .collect()
            })
            .collect();
        let cof = top.mul(&determinant(&sub));
        acc = if j % 2 == 0 { acc.add(&cof) } else { acc.sub(&cof) };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn ctx(names: &[&str]) -> Ctx {
        VariableContext::new(names.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    fn p(s: &str, c: &Ctx) -> Polynomial {
        parse_polynomial(s, c, q()).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let c = ctx(&["y", "x"]);
        let basis = vec![p("y^2 - x^3", &c)];
        let r = normal_form(&p("y^2", &c), &basis, &MonomialOrder::Lex);
        assert_eq!(r, p("x^3", &c));

        let f = p("x*y + 1", &c);
        assert_eq!(normal_form(&f, &[], &MonomialOrder::GrevLex), f);
    }

    #[test]
    fn normal_form_is_idempotent() {
        let c = ctx(&["x", "y"]);
        let basis = vec![p("x^2 - y", &c), p("x*y - 1", &c)];
        let order = MonomialOrder::GrevLex;
        let f = p("x^3*y^2 + x*y + y^2 - 3", &c);
        let r = normal_form(&f, &basis, &order);
        assert_eq!(normal_form(&r, &basis, &order), r);
    }

    #[test]
    fn single_generator_is_its_own_gb() {
        let c = ctx(&["x", "y"]);
        // x^3 has higher grevlex degree, so the monic normal form flips signs.
        let i = Ideal::new(&c, q(), vec![p("y^2 - x^3", &c)]);
        assert_eq!(i.groebner_basis().unwrap(), &[p("x^3 - y^2", &c)]);
        assert!(i.contains(&p("y^2 - x^3", &c)).unwrap());
    }

    #[test]
    fn redundant_generator_collapses() {
        // w^2 - z^2 = -(z - w)(z + w) reduces to 0 against z - w.
        let c = ctx(&["z", "w"]);
        for order in [MonomialOrder::Lex, MonomialOrder::GrevLex] {
            let i = Ideal::with_order(
                &c,
                q(),
                vec![p("z - w", &c), p("w^2 - z^2", &c)],
                order,
            );
            assert_eq!(i.groebner_basis().unwrap(), &[p("z - w", &c)]);
        }
    }

    #[test]
    fn cusp_elimination() {
        // Oracle: y^2 - x^3 vanishes under x = t^2, y = t^3, and the
        // parametrization is onto the cusp.
        let c = ctx(&["t", "x", "y"]);
        let i = Ideal::new(&c, q(), vec![p("x - t^2", &c), p("y - t^3", &c)]);
        let e = i.eliminate(&["t".to_string()].into()).unwrap();
        let small = ctx(&["x", "y"]);
        let expected = Ideal::new(&small, q(), vec![p("y^2 - x^3", &small)]);
        assert!(e.equal(&expected).unwrap());
        // substitution oracle: every returned generator vanishes on the graph
        let tctx = ctx(&["t"]);
        let images = vec![
            parse_polynomial("t^2", &tctx, q()).unwrap(),
            parse_polynomial("t^3", &tctx, q()).unwrap(),
        ];
        for g in e.generators() {
            assert!(g.substitute_full(&images).is_zero());
        }
    }

    #[test]
    fn eliminate_nothing_is_identity() {
        let c = ctx(&["x", "y"]);
        let i = Ideal::new(&c, q(), vec![p("x*y - 1", &c)]);
        let e = i.eliminate(&BTreeSet::new()).unwrap();
        assert!(e.equal(&i).unwrap());
    }

    #[test]
    fn membership_examples() {
        let c = ctx(&["z", "w"]);
        let i = Ideal::new(&c, q(), vec![p("w^2", &c)]);
        assert!(!i.contains(&p("w", &c)).unwrap());
        assert!(i.contains(&p("w^2", &c)).unwrap());
    }

    #[test]
    fn radical_membership_examples() {
        let c = ctx(&["z", "w"]);
        let i = Ideal::new(&c, q(), vec![p("w^2", &c)]);
        assert!(i.radical_contains(&p("w", &c)).unwrap());
        assert!(!i.radical_contains(&p("z", &c)).unwrap());
        assert_eq!(i.radical_witness_power(&p("w", &c), 20).unwrap(), Some(2));

        let c2 = ctx(&["x", "y"]);
        let cusp = Ideal::new(&c2, q(), vec![p("y^2 - x^3", &c2)]);
        assert!(cusp.radical_contains(&p("-(y^2 - x^3)", &c2)).unwrap());
    }

    #[test]
    fn saturation_examples() {
        let c = ctx(&["x", "w"]);
        let i = Ideal::new(&c, q(), vec![p("x*w", &c)]);
        let s = i.saturate(&p("x", &c)).unwrap();
        assert!(s.equal(&Ideal::new(&c, q(), vec![p("w", &c)])).unwrap());

        let c2 = ctx(&["z", "w"]);
        let j = Ideal::new(&c2, q(), vec![p("w^2", &c2)]);
        let s2 = j.saturate(&p("z", &c2)).unwrap();
        assert!(s2.equal(&j).unwrap());

        // g in I: closure of the empty set
        let s3 = i.saturate(&p("x*w", &c)).unwrap();
        assert!(s3.is_empty_variety().unwrap());

        assert_eq!(
            i.saturate(&Polynomial::zero(&c, q())).unwrap_err(),
            IdealError::ZeroDivisorPolynomial
        );
    }

    #[test]
    fn dimension_examples() {
        let c = ctx(&["z", "w"]);
        let i = Ideal::new(&c, q(), vec![p("w^2", &c)]);
        assert_eq!(i.krull_dimension().unwrap(), Dimension::Dim(1));

        let origin = Ideal::new(&c, q(), vec![p("z", &c), p("w", &c)]);
        assert_eq!(origin.krull_dimension().unwrap(), Dimension::Dim(0));

        let zero = Ideal::new(&c, q(), vec![]);
        assert_eq!(zero.krull_dimension().unwrap(), Dimension::Dim(2));

        let unit = Ideal::new(&c, q(), vec![p("1", &c)]);
        assert_eq!(unit.krull_dimension().unwrap(), Dimension::Empty);
    }

    #[test]
    fn emptiness_examples() {
        let c = ctx(&["x", "y"]);
        assert!(Ideal::new(&c, q(), vec![p("x", &c), p("1 - x", &c)])
            .is_empty_variety()
            .unwrap());
        assert!(!Ideal::new(&c, q(), vec![p("x", &c), p("y", &c)])
            .is_empty_variety()
            .unwrap());
        let cusp_origin = Ideal::new(
            &c,
            q(),
            vec![p("y^2 - x^3", &c), p("x", &c), p("y", &c)],
        );
        assert!(!cusp_origin.is_empty_variety().unwrap());
    }

    #[test]
    fn ideal_equality_examples() {
        let c = ctx(&["z", "w"]);
        let a = Ideal::new(&c, q(), vec![p("z - w", &c), p("w^2 - z^2", &c)]);
        let b = Ideal::new(&c, q(), vec![p("z - w", &c)]);
        assert!(a.equal(&b).unwrap());
        assert!(a.equal(&a).unwrap());
        let w1 = Ideal::new(&c, q(), vec![p("w", &c)]);
        let w2 = Ideal::new(&c, q(), vec![p("w^2", &c)]);
        assert!(!w1.equal(&w2).unwrap());
    }

    #[test]
    fn minors_of_the_cusp_jacobian() {
        let c = ctx(&["x", "y"]);
        let z = Polynomial::zero(&c, q());
        let j = vec![
            vec![z.clone(), z.clone()],
            vec![p("y", &c), p("-x", &c)],
            vec![z.clone(), z.clone()],
            vec![p("x^2", &c), p("-y", &c)],
        ];
        let m2 = matrix_minors(&j, 2).unwrap();
        let nonzero: Vec<&Polynomial> = m2.iter().filter(|m| !m.is_zero()).collect();
        assert_eq!(nonzero.len(), 1);
        let want = p("x^3 - y^2", &c);
        assert!(*nonzero[0] == want || *nonzero[0] == want.neg());

        let m1 = matrix_minors(&j, 1).unwrap();
        assert_eq!(m1.len(), 8);
        assert!(m1.contains(&p("y", &c)) && m1.contains(&p("-x", &c)));

        assert_eq!(matrix_minors(&j, 3).unwrap_err(), IdealError::BadMinorSize);
        let zero_m = vec![vec![z.clone(), z.clone()]];
        assert!(matrix_minors(&zero_m, 1).unwrap().iter().all(|m| m.is_zero()));
    }

    #[test]
    fn pair_ceiling_reports_resource_limit() {
        let c = ctx(&["x", "y", "z"]);
        let i = Ideal::new(
            &c,
            q(),
            vec![p("x^2 + y*z", &c), p("y^2 + x*z", &c), p("z^2 + x*y", &c)],
        )
        .with_limits(GbLimits {
            max_pairs: 1,
            ..GbLimits::default()
        });
        assert!(matches!(
            i.groebner_basis(),
            Err(IdealError::ResourceLimit(_))
        ));
    }
}
