//! Exact coefficient arithmetic over the rationals and prime fields.
//!
//! All arithmetic is exact; rationals use arbitrary-precision integers
//! (Groebner intermediate coefficients grow without bound), prime-field
//! elements are residues in `[0, p)`.
//!
//! Geometric conclusions drawn downstream (emptiness via `1 ∈ I`, radical
//! membership) are interpreted over the algebraic closure of the coefficient
//! field; per-point analyses are restricted to points rational over it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse field element from `{0}`")]
    BadLiteral(String),
}

/// The coefficient field: ℚ or 𝔽_p for a prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn prime_field(p: u64) -> Result<FieldSpec, CoeffError> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(CoeffError::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_int(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// Canonical image of an integer: `n/1` in ℚ, the residue `n mod p` in 𝔽_p.
    pub fn from_int(&self, n: i64) -> FieldElement {
        match self {
            FieldSpec::Rationals => FieldElement::Rat(BigRational::from(BigInt::from(n))),
            FieldSpec::PrimeField(p) => FieldElement::Mod {
                residue: n.rem_euclid(*p as i64) as u64,
                p: *p,
            },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match self {
            FieldSpec::Rationals => FieldElement::Rat(BigRational::from(n.clone())),
            FieldSpec::PrimeField(p) => {
                let m = BigInt::from(*p);
                let r = ((n % &m) + &m) % &m;
                FieldElement::Mod {
                    residue: u64::try_from(r).expect("reduced residue fits u64"),
                    p: *p,
                }
            }
        }
    }

    /// Parses `a` or `a/b` with optional sign. Fractions are rejected in 𝔽_p
    /// unless the denominator is invertible (it always is, being nonzero mod p).
    pub fn parse_element(&self, text: &str) -> Result<FieldElement, CoeffError> {
        let bad = || CoeffError::BadLiteral(text.to_string());
        let mut parts = text.splitn(2, '/');
        let num_s = parts.next().ok_or_else(bad)?.trim();
        let num: BigInt = num_s.parse().map_err(|_| bad())?;
        let num = self.from_bigint(&num);
        match parts.next() {
            None => Ok(num),
            Some(den_s) => {
                let den: BigInt = den_s.trim().parse().map_err(|_| bad())?;
                num.div(&self.from_bigint(&den))
            }
        }
    }
}

/// An exact scalar in ℚ or 𝔽_p, always held in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rat(BigRational),
    Mod { residue: u64, p: u64 },
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

impl FieldElement {
    pub fn spec(&self) -> FieldSpec {
        match self {
            FieldElement::Rat(_) => FieldSpec::Rationals,
            FieldElement::Mod { p, .. } => FieldSpec::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rat(r) => r.is_zero(),
            FieldElement::Mod { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rat(r) => r.is_one(),
            FieldElement::Mod { residue, .. } => *residue == 1,
        }
    }

    fn check_same(&self, other: &FieldElement) {
        assert_eq!(
            self.spec(),
            other.spec(),
            "mixed coefficient fields: {:?} vs {:?}",
            self.spec(),
            other.spec()
        );
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.check_same(other);
        match (self, other) {
            (FieldElement::Rat(a), FieldElement::Rat(b)) => FieldElement::Rat(a + b),
            (FieldElement::Mod { residue: a, p }, FieldElement::Mod { residue: b, .. }) => {
                FieldElement::Mod {
                    residue: ((*a as u128 + *b as u128) % *p as u128) as u64,
                    p: *p,
                }
            }
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.check_same(other);
        match (self, other) {
            (FieldElement::Rat(a), FieldElement::Rat(b)) => FieldElement::Rat(a * b),
            (FieldElement::Mod { residue: a, p }, FieldElement::Mod { residue: b, .. }) => {
                FieldElement::Mod {
                    residue: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    p: *p,
                }
            }
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> FieldElement {
        match self {
            FieldElement::Rat(a) => FieldElement::Rat(-a),
            FieldElement::Mod { residue, p } => FieldElement::Mod {
                residue: if *residue == 0 { 0 } else { p - residue },
                p: *p,
            },
        }
    }

    pub fn inv(&self) -> Result<FieldElement, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(match self {
            FieldElement::Rat(a) => FieldElement::Rat(a.recip()),
            FieldElement::Mod { residue, p } => FieldElement::Mod {
                residue: mod_pow(*residue, p - 2, *p),
                p: *p,
            },
        })
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement, CoeffError> {
        self.check_same(other);
        Ok(self.mul(&other.inv()?))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElement::Mod { residue, .. } => write!(f, "{residue}"),
        }
    }
}

/// True when the rational is non-negative / the residue is taken as-is; used
/// only for choosing `+`/`-` separators when printing polynomials.
pub(crate) fn display_negative(c: &FieldElement) -> bool {
    match c {
        FieldElement::Rat(r) => r.is_negative(),
        FieldElement::Mod { .. } => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> FieldElement {
        FieldSpec::Rationals
            .from_int(n)
            .div(&FieldSpec::Rationals.from_int(d))
            .unwrap()
    }

    #[test]
    fn rational_add_canonical() {
        assert_eq!(q(1, 2).add(&q(1, 3)), q(5, 6));
    }

    #[test]
    fn prime_field_mul_wraps() {
        let f5 = FieldSpec::prime_field(5).unwrap();
        assert_eq!(f5.from_int(3).mul(&f5.from_int(2)), f5.from_int(1));
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(
            FieldSpec::Rationals.zero().inv(),
            Err(CoeffError::DivisionByZero)
        );
        let f5 = FieldSpec::prime_field(5).unwrap();
        assert_eq!(f5.zero().inv(), Err(CoeffError::DivisionByZero));
    }

    #[test]
    fn int_embed_examples() {
        let f5 = FieldSpec::prime_field(5).unwrap();
        assert_eq!(f5.from_int(7), f5.from_int(2));
        assert_eq!(f5.from_int(5), f5.zero());
        assert_eq!(FieldSpec::Rationals.from_int(-1), q(-1, 1));
    }

    #[test]
    fn characteristic_kills_p_fold_sum() {
        for p in [2u64, 3, 5, 7] {
            let fp = FieldSpec::prime_field(p).unwrap();
            let mut s = fp.zero();
            for _ in 0..p {
                s = s.add(&fp.one());
            }
            assert!(s.is_zero(), "p-fold sum of 1 must vanish in F_{p}");
        }
    }

    #[test]
    fn prime_check_rejects_composites() {
        assert!(FieldSpec::prime_field(1).is_err());
        assert!(FieldSpec::prime_field(4).is_err());
        assert!(FieldSpec::prime_field(91).is_err());
        assert!(FieldSpec::prime_field(97).is_ok());
    }

    #[test]
    #[should_panic(expected = "mixed coefficient fields")]
    fn mixed_fields_panic() {
        let f5 = FieldSpec::prime_field(5).unwrap();
        let _ = FieldSpec::Rationals.one().add(&f5.one());
    }

    #[test]
    fn parse_element_forms() {
        assert_eq!(FieldSpec::Rationals.parse_element("-3/6").unwrap(), q(-1, 2));
        let f5 = FieldSpec::prime_field(5).unwrap();
        assert_eq!(f5.parse_element("7").unwrap(), f5.from_int(2));
        assert!(FieldSpec::Rationals.parse_element("x").is_err());
    }

    fn arb_rat() -> impl Strategy<Value = FieldElement> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| q(n, d))
    }

    fn arb_f5() -> impl Strategy<Value = FieldElement> {
        (0i64..5).prop_map(|n| FieldSpec::prime_field(5).unwrap().from_int(n))
    }

    proptest! {
        #[test]
        fn field_axioms_q(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            if !a.is_zero() {
                prop_assert!(a.mul(&a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn field_axioms_f5(a in arb_f5(), b in arb_f5(), c in arb_f5()) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            if !a.is_zero() {
                prop_assert!(a.mul(&a.inv().unwrap()).is_one());
            }
        }
    }
}
