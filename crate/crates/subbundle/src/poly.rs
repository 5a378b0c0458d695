//! Sparse multivariate polynomials: monomial orders, arithmetic,
//! differentiation, substitution, and decomposition by degree in the
//! fiber-variable block.

use crate::coeff::{display_negative, FieldElement, FieldSpec};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomials live in different variable contexts")]
    ContextMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable context has no base/fiber block split")]
    NoBlockSplit,
    #[error("monomial exponent overflow")]
    ExponentOverflow,
    #[error("variable names must be distinct and non-empty")]
    BadVariableList,
    #[error("block split must leave both blocks non-empty")]
    BadBlockSplit,
}

/// An ordered list of variable names, optionally split into a base block
/// followed by a fiber block.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableContext {
    names: Vec<String>,
    block_split: Option<usize>,
}

pub type Ctx = Arc<VariableContext>;

impl VariableContext {
    pub fn new(names: Vec<String>) -> Result<Ctx, PolyError> {
        let set: BTreeSet<&String> = names.iter().collect();
        if set.len() != names.len() || names.iter().any(|n| n.is_empty()) {
            return Err(PolyError::BadVariableList);
        }
        Ok(Arc::new(VariableContext {
            names,
            block_split: None,
        }))
    }

    /// Base block is `names[..split]`, fiber block `names[split..]`.
    pub fn with_split(names: Vec<String>, split: usize) -> Result<Ctx, PolyError> {
        if split == 0 || split >= names.len() {
            return Err(PolyError::BadBlockSplit);
        }
        let ctx = VariableContext::new(names)?;
        let mut inner = (*ctx).clone();
        inner.block_split = Some(split);
        Ok(Arc::new(inner))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn block_split(&self) -> Option<usize> {
        self.block_split
    }

    pub fn base_names(&self) -> Option<&[String]> {
        self.block_split.map(|s| &self.names[..s])
    }

    pub fn fiber_names(&self) -> Option<&[String]> {
        self.block_split.map(|s| &self.names[s..])
    }
}

/// Exponent vector, one entry per context variable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exponents: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exponents[i] = 1;
        m
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Monomial {
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i]
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial, PolyError> {
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a.checked_add(*b).ok_or(PolyError::ExponentOverflow))
            .collect::<Result<_, _>>()?;
        Ok(Monomial { exponents })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: other
                .exponents
                .iter()
                .zip(&self.exponents)
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }
}

/// Total orders on monomials: plain Lex and GrevLex, plus a block order that
/// compares an elimination block first (GrevLex within each block).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    BlockElim(BTreeSet<usize>),
}

fn grevlex_cmp_masked(a: &Monomial, b: &Monomial, mask: Option<&BTreeSet<usize>>, invert: bool) -> Ordering {
    let keep = |i: usize| match mask {
        None => true,
        Some(s) => s.contains(&i) != invert,
    };
    let deg = |m: &Monomial| -> u64 {
        m.exponents
            .iter()
            .enumerate()
            .filter(|(i, _)| keep(*i))
            .map(|(_, &e)| e as u64)
            .sum()
    };
    match deg(a).cmp(&deg(b)) {
        Ordering::Equal => {}
        o => return o,
    }
    // Rightmost differing exponent: smaller exponent means larger monomial.
    for i in (0..a.exponents.len()).rev() {
        if keep(i) && a.exponents[i] != b.exponents[i] {
            return b.exponents[i].cmp(&a.exponents[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.exponents.len(), b.exponents.len());
        match self {
            MonomialOrder::Lex => {
                for i in 0..a.exponents.len() {
                    match a.exponents[i].cmp(&b.exponents[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::GrevLex => grevlex_cmp_masked(a, b, None, false),
            MonomialOrder::BlockElim(elim) => {
                match grevlex_cmp_masked(a, b, Some(elim), false) {
                    Ordering::Equal => grevlex_cmp_masked(a, b, Some(elim), true),
                    o => o,
                }
            }
        }
    }
}

/// Sparse multivariate polynomial; the zero polynomial has no terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ctx: Ctx,
    field: FieldSpec,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl Polynomial {
    pub fn zero(ctx: &Ctx, field: FieldSpec) -> Polynomial {
        Polynomial {
            ctx: ctx.clone(),
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &Ctx, c: FieldElement) -> Polynomial {
        let mut p = Polynomial::zero(ctx, c.spec());
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ctx.len()), c);
        }
        p
    }

    pub fn variable(ctx: &Ctx, i: usize, field: FieldSpec) -> Polynomial {
        let mut p = Polynomial::zero(ctx, field);
        p.terms.insert(Monomial::var(ctx.len(), i), field.one());
        p
    }

    pub fn from_terms<I>(ctx: &Ctx, field: FieldSpec, terms: I) -> Polynomial
    where
        I: IntoIterator<Item = (Monomial, FieldElement)>,
    {
        let mut p = Polynomial::zero(ctx, field);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let s = old.add(&c);
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    fn check_ctx(&self, other: &Polynomial) {
        assert!(
            *self.ctx == *other.ctx && self.field == other.field,
            "polynomial context/field mismatch"
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_ctx(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_ctx(other);
        let mut out = Polynomial::zero(&self.ctx, self.field);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb).expect("monomial exponent overflow");
                out.add_term(m, ca.mul(cb));
            }
        }
        out
    }

    pub fn scalar_mul(&self, c: &FieldElement) -> Polynomial {
        assert_eq!(c.spec(), self.field, "scalar from a different field");
        if c.is_zero() {
            return Polynomial::zero(&self.ctx, self.field);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.mul(c)))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx, self.field);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(mm, k)| (mm.mul(m).expect("monomial exponent overflow"), k.mul(c)))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut out = Polynomial::constant(&self.ctx, self.field.one());
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Leading (monomial, coefficient) under `order`, `None` for zero.
    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Monomial, &FieldElement)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inv().expect("leading coefficient nonzero");
                self.scalar_mul(&inv)
            }
        }
    }

    /// Formal partial derivative with respect to the named variable.
    pub fn partial_derivative(&self, var: &str) -> Result<Polynomial, PolyError> {
        let i = self
            .ctx
            .index_of(var)
            .ok_or_else(|| PolyError::UnknownVariable(var.to_string()))?;
        Ok(self.partial_derivative_idx(i))
    }

    pub fn partial_derivative_idx(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.ctx, self.field);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[i] -= 1;
            let coeff = c.mul(&self.field.from_int(e as i64));
            out.add_term(Monomial::from_exponents(exps), coeff);
        }
        out
    }

    /// Substitutes polynomials (in the same context) for a subset of the
    /// variables; unassigned variables are untouched.
    pub fn substitute(&self, assignment: &BTreeMap<usize, Polynomial>) -> Polynomial {
        for v in assignment.values() {
            self.check_ctx(v);
        }
        let mut out = Polynomial::zero(&self.ctx, self.field);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(&self.ctx, c.clone());
            let mut residual = vec![0u32; self.ctx.len()];
            for i in m.support() {
                match assignment.get(&i) {
                    Some(img) => term = term.mul(&img.pow(m.exponent(i))),
                    None => residual[i] = m.exponent(i),
                }
            }
            out = out.add(&term.mul_term(&Monomial::from_exponents(residual), &self.field.one()));
        }
        out
    }

    /// Full substitution into a (possibly different) target context: one image
    /// per variable of this polynomial's context.
    pub fn substitute_full(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ctx.len(), "one image per variable");
        let tctx = images
            .first()
            .map(|p| p.ctx.clone())
            .expect("non-empty context");
        let mut out = Polynomial::zero(&tctx, self.field);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(&tctx, c.clone());
            for i in m.support() {
                term = term.mul(&images[i].pow(m.exponent(i)));
            }
            out = out.add(&term);
        }
        out
    }

    /// Evaluates at a point, one coordinate per variable.
    pub fn eval(&self, point: &[FieldElement]) -> FieldElement {
        assert_eq!(point.len(), self.ctx.len());
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for i in m.support() {
                let mut pw = self.field.one();
                for _ in 0..m.exponent(i) {
                    pw = pw.mul(&point[i]);
                }
                t = t.mul(&pw);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Moves the polynomial into a context containing the same variable names
    /// (matched by name). Fails when a variable actually occurring in the
    /// polynomial is absent from the target.
    pub fn transport(&self, target: &Ctx) -> Result<Polynomial, PolyError> {
        let map: Vec<Option<usize>> = self
            .ctx
            .names()
            .iter()
            .map(|n| target.index_of(n))
            .collect();
        let mut out = Polynomial::zero(target, self.field);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.len()];
            for i in m.support() {
                match map[i] {
                    Some(j) => exps[j] = m.exponent(i),
                    None => {
                        return Err(PolyError::UnknownVariable(
                            self.ctx.name(i).to_string(),
                        ))
                    }
                }
            }
            out.add_term(Monomial::from_exponents(exps), c.clone());
        }
        Ok(out)
    }

    /// Indices of variables that actually occur.
    pub fn used_variables(&self) -> BTreeSet<usize> {
        let mut s = BTreeSet::new();
        for m in self.terms.keys() {
            s.extend(m.support());
        }
        s
    }

    /// Splits into homogeneous components by total degree; index = degree,
    /// components sum to the input.
    pub fn homogeneous_components(&self) -> Vec<Polynomial> {
        let maxdeg = self.total_degree() as usize;
        let mut out = vec![Polynomial::zero(&self.ctx, self.field); maxdeg + 1];
        for (m, c) in &self.terms {
            out[m.degree() as usize].add_term(m.clone(), c.clone());
        }
        if self.is_zero() {
            out.truncate(1);
        }
        out
    }

    fn fiber_degree(&self, m: &Monomial, split: usize) -> u32 {
        m.exponents()[split..].iter().sum()
    }

    /// Components graded by total degree in the fiber block: component `j`
    /// is the coefficient of `t^j` in `f(x, t*y)`.
    pub fn fiber_degree_components(&self) -> Result<Vec<Polynomial>, PolyError> {
        let split = self.ctx.block_split().ok_or(PolyError::NoBlockSplit)?;
        let maxdeg = self
            .terms
            .keys()
            .map(|m| self.fiber_degree(m, split))
            .max()
            .unwrap_or(0) as usize;
        let mut out = vec![Polynomial::zero(&self.ctx, self.field); maxdeg + 1];
        for (m, c) in &self.terms {
            let d = self.fiber_degree(m, split) as usize;
            out[d].add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Row of the Jacobian at the zero section: entry `j` is
    /// `∂f/∂y_j` evaluated at `y = 0`, a polynomial in the base variables,
    /// returned in the given base-only context.
    pub fn fiber_linear_part(&self, base_ctx: &Ctx) -> Result<Vec<Polynomial>, PolyError> {
        let split = self.ctx.block_split().ok_or(PolyError::NoBlockSplit)?;
        let nfib = self.ctx.len() - split;
        let mut out = vec![Polynomial::zero(base_ctx, self.field); nfib];
        for (m, c) in &self.terms {
            if self.fiber_degree(m, split) != 1 {
                continue;
            }
            let j = (split..self.ctx.len())
                .find(|&i| m.exponent(i) == 1)
                .expect("fiber degree 1");
            let mut exps = vec![0u32; base_ctx.len()];
            for i in 0..split {
                if m.exponent(i) > 0 {
                    let bi = base_ctx
                        .index_of(self.ctx.name(i))
                        .ok_or_else(|| PolyError::UnknownVariable(self.ctx.name(i).into()))?;
                    exps[bi] = m.exponent(i);
                }
            }
            out[j - split].add_term(Monomial::from_exponents(exps), c.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let order = MonomialOrder::GrevLex;
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let (neg, cabs) = if display_negative(c) {
                (true, c.neg())
            } else {
                (false, c.clone())
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !cabs.is_one() || m.is_one() {
                factors.push(cabs.to_string());
            }
            for i in m.support() {
                let e = m.exponent(i);
                if e == 1 {
                    factors.push(self.ctx.name(i).to_string());
                } else {
                    factors.push(format!("{}^{}", self.ctx.name(i), e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Text syntax: integer coefficients, identifiers, `^` powers, optional `*`,
// `+`/`-` separators, parentheses.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("at column {col}: {msg}")]
pub struct PolyParseError {
    pub col: usize,
    pub msg: String,
}

struct PolyParser<'a> {
    chars: Vec<char>,
    pos: usize,
    ctx: &'a Ctx,
    field: FieldSpec,
}

impl<'a> PolyParser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyParseError> {
        Err(PolyParseError {
            col: self.pos + 1,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial, PolyParseError> {
        let mut sign_neg = false;
        while let Some(c) = self.peek() {
            match c {
                '+' => self.pos += 1,
                '-' => {
                    sign_neg = !sign_neg;
                    self.pos += 1;
                }
                _ => break,
            }
        }
        let mut acc = self.term()?;
        if sign_neg {
            acc = acc.neg();
        }
        while let Some(c) = self.peek() {
            match c {
                '+' | '-' => {
                    let mut neg = false;
                    while let Some(c2) = self.peek() {
                        match c2 {
                            '+' => self.pos += 1,
                            '-' => {
                                neg = !neg;
                                self.pos += 1;
                            }
                            _ => break,
                        }
                    }
                    let t = self.term()?;
                    acc = if neg { acc.sub(&t) } else { acc.add(&t) };
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, PolyParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                // implicit multiplication
                Some(c) if c.is_ascii_alphanumeric() || c == '_' || c == '(' => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, PolyParseError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = self.integer()?;
                    let n: u32 = n
                        .parse()
                        .map_err(|_| PolyParseError {
                            col: self.pos,
                            msg: "exponent too large".into(),
                        })?;
                    Ok(base.pow(n))
                }
                _ => self.err("expected a non-negative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn integer(&mut self) -> Result<String, PolyParseError> {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn atom(&mut self) -> Result<Polynomial, PolyParseError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() == Some(')') {
                    self.pos += 1;
                    Ok(e)
                } else {
                    self.err("expected `)`")
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.integer()?;
                let n: num_bigint::BigInt = digits.parse().expect("digits parse");
                Ok(Polynomial::constant(self.ctx, self.field.from_bigint(&n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len() {
                    let ch = self.chars[self.pos];
                    if ch.is_ascii_alphanumeric() || ch == '_' {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                match self.ctx.index_of(&name) {
                    Some(i) => Ok(Polynomial::variable(self.ctx, i, self.field)),
                    None => Err(PolyParseError {
                        col: start + 1,
                        msg: format!("unknown variable `{name}`"),
                    }),
                }
            }
            Some(c) => self.err(format!("unexpected character `{c}`")),
            None => self.err("unexpected end of expression"),
        }
    }
}

/// Parses the shared polynomial text syntax, e.g. `w^2 - x*z^2`.
pub fn parse_polynomial(
    text: &str,
    ctx: &Ctx,
    field: FieldSpec,
) -> Result<Polynomial, PolyParseError> {
    let mut p = PolyParser {
        chars: text.chars().collect(),
        pos: 0,
        ctx,
        field,
    };
    if p.peek().is_none() {
        return p.err("empty polynomial");
    }
    let out = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input after polynomial");
    }
    Ok(out)
}
