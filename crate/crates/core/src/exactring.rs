//! Sparse Laurent polynomials with exact coefficients.
//!
//! A polynomial lives in `Q(parameters)[x_1^{+-1}, ..., x_n^{+-1}]`; the scalar
//! type is generic so that the same container evaluates exactly over rationals
//! and numerically over complex doubles.  Monomials `x^{mu + (k/2) delta}` with
//! a half-integer multiple of the null root are realized eagerly as
//! `qh^k * x^mu`, where `qh` is the stored square root of `q`.
//!
//! Design notes:
//! - BTreeMap keyed by the exponent vector (lexicographic order) gives a
//!   canonical ordered representation, so structural equality is semantic
//!   equality and serialization order is deterministic.
//! - Divided differences are computed termwise from the finite geometric sum
//!   along the root string; the rational-function division route exists in the
//!   test suite as an independent oracle.

use crate::rootsys::{AffineRoot, SignedPermutation};
use crate::scalar::Scalar;
use crate::{Rat, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector of a Laurent monomial: `x^e = x_1^{e_1} ... x_n^{e_n}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent(pub Vec<i64>);

impl Exponent {
    pub fn zero(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Exponent(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of entry absolute values (the `|lambda|` grading).
    pub fn abs_sum(&self) -> i64 {
        self.0.iter().map(|e| e.abs()).sum()
    }
}

impl From<Vec<i64>> for Exponent {
    fn from(v: Vec<i64>) -> Self {
        Exponent(v)
    }
}

/// Sparse Laurent polynomial over the scalar `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly<C: Scalar> {
    n: usize,
    terms: BTreeMap<Exponent, C>,
}

impl<C: Scalar> LaurentPoly<C> {
    pub fn zero(n: usize) -> Self {
        LaurentPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: C) -> Self {
        Self::monomial(Exponent::zero(n), c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, C::one())
    }

    pub fn monomial(e: Exponent, c: C) -> Self {
        let n = e.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { n, terms }
    }

    /// The variable `x_i` (zero-based index).
    pub fn var(n: usize, i: usize) -> Self {
        Self::monomial(Exponent::unit(n, i), C::one())
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (lexicographic) order.
    pub fn iter(&self) -> impl Iterator<Item = (&Exponent, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponent) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, e: Exponent, c: C) {
        debug_assert_eq!(e.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        let mut out = Self::zero(self.n);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v.clone() * c.clone());
        }
        out
    }

    /// Multiply by the single monomial `c * x^e`.
    pub fn mul_monomial(&self, e: &Exponent, c: &C) -> Self {
        let mut out = Self::zero(self.n);
        if c.is_zero() {
            return out;
        }
        for (f, v) in &self.terms {
            let g: Vec<i64> = f.0.iter().zip(&e.0).map(|(a, b)| a + b).collect();
            out.add_term(Exponent(g), v.clone() * c.clone());
        }
        out
    }

    /// Evaluate at a point of a (possibly different) scalar type.
    pub fn eval_map<S: Scalar>(&self, point: &[S], embed: impl Fn(&C) -> S) -> S {
        assert_eq!(point.len(), self.n);
        let mut acc = S::zero();
        for (e, c) in &self.terms {
            let mut m = embed(c);
            for (i, &k) in e.0.iter().enumerate() {
                if k != 0 {
                    m = m * point[i].powi(k);
                }
            }
            acc = acc + m;
        }
        acc
    }

    pub fn eval(&self, point: &[C]) -> C {
        self.eval_map(point, |c| c.clone())
    }

    /// Substitute `x^e -> x^{w e}` for a signed permutation `w`.
    pub fn act_weyl(&self, w: &SignedPermutation) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(Exponent(w.apply_weight(&e.0)), c.clone());
        }
        out
    }

    /// Substitute `x^lam -> x^{s_beta lam}` for the reflection in an affine
    /// root `beta`.  Since `s_beta lam = lam - <lam, beta_v> beta` picks up a
    /// `delta`-component, each monomial is rescaled by the matching power of
    /// `qh = q^{1/2}`.
    pub fn act_reflection(&self, beta: &AffineRoot, qh: &C) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let k = beta.pair_coroot(&e.0);
            let g: Vec<i64> = e
                .0
                .iter()
                .zip(&beta.grad)
                .map(|(a, b)| a - k * b)
                .collect();
            out.add_term(Exponent(g), c.clone() * qh.powi(-k * beta.half_delta));
        }
        out
    }

    /// Divided difference `D_beta f = (f - s_beta f) / (1 - x^beta)`,
    /// computed termwise: with `k = <lam, beta_v>`,
    /// `D_beta x^lam` is `-(x^{lam-beta} + ... + x^{lam-k beta})` for `k > 0`,
    /// zero for `k = 0`, and `x^lam + x^{lam+beta} + ... + x^{lam-(1+k) beta}`
    /// for `k < 0`.
    pub fn divided_difference(&self, beta: &AffineRoot, qh: &C) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let k = beta.pair_coroot(&e.0);
            if k > 0 {
                for j in 1..=k {
                    let g: Vec<i64> = e
                        .0
                        .iter()
                        .zip(&beta.grad)
                        .map(|(a, b)| a - j * b)
                        .collect();
                    out.add_term(
                        Exponent(g),
                        c.clone().neg() * qh.powi(-j * beta.half_delta),
                    );
                }
            } else {
                for j in 0..-k {
                    let g: Vec<i64> = e
                        .0
                        .iter()
                        .zip(&beta.grad)
                        .map(|(a, b)| a + j * b)
                        .collect();
                    out.add_term(Exponent(g), c.clone() * qh.powi(j * beta.half_delta));
                }
            }
        }
        out
    }

    /// Maximum `abs_sum` over the support (0 for the zero polynomial).
    pub fn degree(&self) -> i64 {
        self.terms.keys().map(Exponent::abs_sum).max().unwrap_or(0)
    }
}

impl<C: Scalar> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: Self) -> LaurentPoly<C> {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<C: Scalar> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone().neg());
        }
        out
    }
}

impl<C: Scalar> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone().neg());
        }
        out
    }
}

impl<C: Scalar> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        assert_eq!(self.n, rhs.n);
        let mut out = LaurentPoly::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let g: Vec<i64> = e1.0.iter().zip(&e2.0).map(|(a, b)| a + b).collect();
                out.add_term(Exponent(g), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Scalar> fmt::Display for LaurentPoly<C>
where
    C: fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &k) in e.0.iter().enumerate() {
                if k != 0 {
                    write!(f, "*x{}^{}", i + 1, k)?;
                }
            }
        }
        Ok(())
    }
}

impl LaurentPoly<Rat> {
    /// Canonical JSON form: `{"n": n, "terms": [{"e": [...], "c": "num/den"}]}`
    /// with terms sorted lexicographically by exponent vector.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| {
                serde_json::json!({
                    "e": e.0,
                    "c": c.to_string(),
                })
            })
            .collect();
        serde_json::json!({ "n": self.n, "terms": terms })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let n = v
            .get("n")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| crate::Error::Parse("missing \"n\"".into()))?
            as usize;
        let mut out = Self::zero(n);
        let terms = v
            .get("terms")
            .and_then(|x| x.as_array())
            .ok_or_else(|| crate::Error::Parse("missing \"terms\"".into()))?;
        for t in terms {
            let e: Vec<i64> = t
                .get("e")
                .and_then(|x| x.as_array())
                .ok_or_else(|| crate::Error::Parse("missing term exponent".into()))?
                .iter()
                .map(|x| {
                    x.as_i64()
                        .ok_or_else(|| crate::Error::Parse("bad exponent entry".into()))
                })
                .collect::<Result<_>>()?;
            if e.len() != n {
                return Err(crate::Error::DimensionMismatch {
                    expected: n,
                    got: e.len(),
                });
            }
            let c = t
                .get("c")
                .and_then(|x| x.as_str())
                .ok_or_else(|| crate::Error::Parse("missing term coefficient".into()))?;
            out.add_term(Exponent(e), crate::scalar::parse_rat(c)?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};
    use num_traits::One;

    fn xpow(e: Vec<i64>) -> LaurentPoly<Rat> {
        LaurentPoly::monomial(Exponent(e), Rat::one())
    }

    #[test]
    fn arithmetic_basics() {
        let x = LaurentPoly::<Rat>::var(2, 0);
        let y = LaurentPoly::<Rat>::var(2, 1);
        let p = &(&x + &y) * &(&x - &y);
        let expect = &(&x * &x) - &(&y * &y);
        assert_eq!(p, expect);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn canonical_ordering_and_equality() {
        let mut p = LaurentPoly::<Rat>::zero(2);
        p.add_term(Exponent(vec![1, 0]), rat(2));
        p.add_term(Exponent(vec![-1, 3]), rat(5));
        let mut q = LaurentPoly::<Rat>::zero(2);
        q.add_term(Exponent(vec![-1, 3]), rat(5));
        q.add_term(Exponent(vec![1, 0]), rat(2));
        assert_eq!(p, q);
        let order: Vec<_> = p.support().cloned().collect();
        assert_eq!(order, vec![Exponent(vec![-1, 3]), Exponent(vec![1, 0])]);
    }

    #[test]
    fn evaluation() {
        // p = 3 x1^2 x2^-1 at (1/2, 3) -> 3 * 1/4 * 1/3 = 1/4.
        let p = LaurentPoly::monomial(Exponent(vec![2, -1]), rat(3));
        assert_eq!(p.eval(&[ratio(1, 2), rat(3)]), ratio(1, 4));
    }

    #[test]
    fn act_reflection_s0_example() {
        // s_0 x^{(1,0)} = q x_1^{-1}: the affine reflection in a_0 = delta - 2 eps_1.
        let a0 = AffineRoot::new(vec![-2, 0], 2);
        let qh = ratio(1, 2); // q = 1/4
        let p = xpow(vec![1, 0]).act_reflection(&a0, &qh);
        assert_eq!(p, LaurentPoly::monomial(Exponent(vec![-1, 0]), ratio(1, 4)));
        // Involution.
        let back = p.act_reflection(&a0, &qh);
        assert_eq!(back, xpow(vec![1, 0]));
    }

    #[test]
    fn divided_difference_long_root() {
        // beta = 2 eps_2, f = x^{(0,1)}: <lam, beta_v> = 1 -> D f = -x^{(0,-1)}.
        let beta = AffineRoot::new(vec![0, 2], 0);
        let d = xpow(vec![0, 1]).divided_difference(&beta, &ratio(1, 2));
        assert_eq!(d, -&xpow(vec![0, -1]));
    }

    #[test]
    fn divided_difference_affine_root_oracle_value() {
        // beta = a_0, f = x^{(-1,0)}: the rational-function oracle gives
        // (f - s_0 f)/(1 - q x_1^{-2}) = -q^{-1} x^{(1,0)}.
        let a0 = AffineRoot::new(vec![-2, 0], 2);
        let qh = ratio(1, 2);
        let d = xpow(vec![-1, 0]).divided_difference(&a0, &qh);
        assert_eq!(d, LaurentPoly::monomial(Exponent(vec![1, 0]), rat(-4)));
    }

    /// Oracle: check (1 - x^beta) * D_beta f == f - s_beta f as polynomials,
    /// which is the defining rational-function division.
    fn check_divided_difference_oracle(f: &LaurentPoly<Rat>, beta: &AffineRoot, qh: &Rat) {
        let d = f.divided_difference(beta, qh);
        let mut one_minus_xb = LaurentPoly::one(f.nvars());
        one_minus_xb.add_term(
            Exponent(beta.grad.clone()),
            -qh.powi(beta.half_delta),
        );
        let lhs = &one_minus_xb * &d;
        let rhs = f - &f.act_reflection(beta, qh);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn divided_difference_division_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(12);
        let qh = ratio(1, 2);
        let roots = [
            AffineRoot::new(vec![-2, 0], 2),  // a_0
            AffineRoot::new(vec![1, -1], 0),  // a_1
            AffineRoot::new(vec![0, 2], 0),   // a_2
            AffineRoot::new(vec![1, 1], 2),   // eps_1 + eps_2 + delta
            AffineRoot::new(vec![-2, 0], 4),  // -2 eps_1 + 2 delta
        ];
        for _ in 0..25 {
            let mut f = LaurentPoly::<Rat>::zero(2);
            for _ in 0..4 {
                f.add_term(
                    Exponent(vec![rng.gen_range(-3..=3), rng.gen_range(-3..=3)]),
                    rat(rng.gen_range(-5..=5)),
                );
            }
            for beta in &roots {
                check_divided_difference_oracle(&f, beta, &qh);
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        let mut p = LaurentPoly::<Rat>::zero(2);
        p.add_term(Exponent(vec![1, -2]), ratio(-3, 7));
        p.add_term(Exponent(vec![0, 0]), rat(2));
        let v = p.to_json();
        let q = LaurentPoly::from_json(&v).unwrap();
        assert_eq!(p, q);
        // Terms come out sorted lexicographically.
        let terms = v["terms"].as_array().unwrap();
        assert_eq!(terms[0]["e"], serde_json::json!([0, 0]));
        assert_eq!(terms[1]["e"], serde_json::json!([1, -2]));
    }
}
