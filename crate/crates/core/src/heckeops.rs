//! Hecke operators in the polynomial representation.
//!
//! The algebra is generated by `T_0, ..., T_n` acting on Laurent polynomials
//! via `T_i f = t_i f - t_i^{-1} * num_i(x) * D_{a_i} f`, where `num_i` is the
//! numerator of the rational weight attached to the simple root `a_i` and
//! `D` the divided difference.  On top of that sit the commuting Cherednik
//! operators `Y_i`, the dual generators `T_0^v, T_n^v`, intertwiners,
//! symmetrizers and the relation checker used by the verification suites.

use crate::exactring::{Exponent, LaurentPoly};
use crate::rootsys::{
    simple_root, t_w_finite, AffineRoot, MultiplicityData, SignedPermutation,
};
use crate::scalar::{parse_rat, Scalar};
use crate::{Error, Poly, Rat, Result};
use num_traits::{One, Zero};

/// Full parameter set: rank, the stored square root of `q`, and the five
/// Hecke parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamSet {
    pub n: usize,
    pub qh: Rat,
    pub mult: MultiplicityData,
}

impl ParamSet {
    pub fn new(n: usize, qh: Rat, mult: MultiplicityData) -> Result<Self> {
        if n < 1 {
            return Err(Error::BadParams("rank must be at least 1".into()));
        }
        if qh.is_zero() || qh == Rat::one() || qh == -Rat::one() {
            return Err(Error::BadParams("qh must avoid {0, 1, -1}".into()));
        }
        if !mult.all_nonzero() {
            return Err(Error::BadParams("all multiplicity parameters must be nonzero".into()));
        }
        Ok(ParamSet { n, qh, mult })
    }

    pub fn q(&self) -> Rat {
        &self.qh * &self.qh
    }

    /// Hecke parameter of the i-th simple reflection.
    pub fn t_simple(&self, i: usize) -> Rat {
        if i == 0 {
            self.mult.t0.clone()
        } else if i < self.n {
            self.mult.t.clone()
        } else {
            self.mult.tn.clone()
        }
    }

    /// Askey–Wilson parametrization
    /// `{a, b, c, d} = {t0 t0v qh, -t0 qh / t0v, tn tnv, -tn / tnv}`.
    pub fn abcd(&self) -> [Rat; 4] {
        let m = &self.mult;
        [
            &m.t0 * &m.t0v * &self.qh,
            -(&m.t0 * &self.qh) / &m.t0v,
            &m.tn * &m.tnv,
            -&m.tn / &m.tnv,
        ]
    }

    /// Duality-swapped parameters (same `qh`).
    pub fn dual(&self) -> Self {
        ParamSet {
            n: self.n,
            qh: self.qh.clone(),
            mult: self.mult.dual(),
        }
    }

    /// `(t, q) -> (t^{-1}, q^{-1})`.
    pub fn inverse(&self) -> Self {
        ParamSet {
            n: self.n,
            qh: self.qh.recip(),
            mult: self.mult.inverse(),
        }
    }

    /// `t -> q t` orbit-wise (used by the anti-symmetric reduction).
    pub fn qshifted(&self) -> Self {
        ParamSet {
            n: self.n,
            qh: self.qh.clone(),
            mult: self.mult.qshift(&self.qh),
        }
    }

    /// Parse `{"qh": "1/2", "t0": "3/5", ...}` with a given rank.
    pub fn from_json(n: usize, v: &serde_json::Value) -> Result<Self> {
        let get = |key: &str| -> Result<Rat> {
            let s = v
                .get(key)
                .and_then(|x| x.as_str())
                .ok_or_else(|| Error::Parse(format!("missing parameter {key:?}")))?;
            parse_rat(s)
        };
        ParamSet::new(
            n,
            get("qh")?,
            MultiplicityData {
                t0: get("t0")?,
                t0v: get("t0v")?,
                t: get("t")?,
                tn: get("tn")?,
                tnv: get("tnv")?,
            },
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "qh": self.qh.to_string(),
            "t0": self.mult.t0.to_string(),
            "t0v": self.mult.t0v.to_string(),
            "t": self.mult.t.to_string(),
            "tn": self.mult.tn.to_string(),
            "tnv": self.mult.tnv.to_string(),
        })
    }
}

/// Numerator polynomial of the weight attached to an affine root:
/// `(1 - t_b t_{b/2} x^{b/2}) (1 + t_b t_{b/2}^{-1} x^{b/2})`, expanded; when
/// `b/2` is not a root the cross terms cancel and this is `1 - t_b^2 x^b`.
pub fn weight_numerator(p: &ParamSet, beta: &AffineRoot) -> Result<Poly> {
    let n = p.n;
    let tb = p.mult.of_root(beta)?;
    let mut out = Poly::one(n);
    match beta.half() {
        Some(h) => {
            let th = p.mult.of_root(&h)?;
            // coefficient of x^{b/2}: -t_b (t_h - t_h^{-1}) times qh^{...}.
            let coeff = -&tb * (&th - th.recip()) * p.qh.powi(h.half_delta);
            out.add_term(Exponent(h.grad.clone()), coeff);
        }
        None => {}
    }
    out.add_term(
        Exponent(beta.grad.clone()),
        -(&tb * &tb) * p.qh.powi(beta.half_delta),
    );
    Ok(out)
}

/// `T_i f` for `0 <= i <= n`.
pub fn apply_ti(p: &ParamSet, i: usize, f: &Poly) -> Result<Poly> {
    let ai = simple_root(p.n, i);
    let ti = p.t_simple(i);
    let num = weight_numerator(p, &ai)?;
    let d = f.divided_difference(&ai, &p.qh);
    Ok(&f.scale(&ti) - &(&num * &d).scale(&ti.recip()))
}

/// `T_i^{-1} f = T_i f - (t_i - t_i^{-1}) f`.
pub fn apply_ti_inv(p: &ParamSet, i: usize, f: &Poly) -> Result<Poly> {
    let ti = p.t_simple(i);
    Ok(&apply_ti(p, i, f)? - &f.scale(&(&ti - ti.recip())))
}

/// `T_0^v f = qh^{-1} T_0^{-1} (x_1 f)`.
pub fn apply_t0v(p: &ParamSet, f: &Poly) -> Result<Poly> {
    let x1 = Exponent::unit(p.n, 0);
    let shifted = f.mul_monomial(&x1, &Rat::one());
    Ok(apply_ti_inv(p, 0, &shifted)?.scale(&p.qh.recip()))
}

/// `T_n^v f = x_n^{-1} (T_n^{-1} f)`.
pub fn apply_tnv(p: &ParamSet, f: &Poly) -> Result<Poly> {
    let mut e = vec![0; p.n];
    e[p.n - 1] = -1;
    Ok(apply_ti_inv(p, p.n, f)?.mul_monomial(&Exponent(e), &Rat::one()))
}

/// One step in an operator word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gen {
    T(usize),
    TInv(usize),
    T0v,
    Tnv,
}

/// Apply a word of generators; the *last* entry acts first (operator order).
pub fn apply_word(p: &ParamSet, word: &[Gen], f: &Poly) -> Result<Poly> {
    let mut g = f.clone();
    for op in word.iter().rev() {
        g = match *op {
            Gen::T(i) => apply_ti(p, i, &g)?,
            Gen::TInv(i) => apply_ti_inv(p, i, &g)?,
            Gen::T0v => apply_t0v(p, &g)?,
            Gen::Tnv => apply_tnv(p, &g)?,
        };
    }
    Ok(g)
}

/// The word for `Y_i` (1-based):
/// `Y_i = T_i ... T_{n-1} T_n T_{n-1} ... T_1 T_0 T_1^{-1} ... T_{i-1}^{-1}`.
fn y_word(n: usize, i: usize) -> Vec<Gen> {
    assert!((1..=n).contains(&i));
    let mut w = Vec::new();
    for j in i..n {
        w.push(Gen::T(j));
    }
    w.push(Gen::T(n));
    for j in (1..n).rev() {
        w.push(Gen::T(j));
    }
    w.push(Gen::T(0));
    for j in 1..i {
        w.push(Gen::TInv(j));
    }
    w
}

fn invert_word(word: &[Gen]) -> Vec<Gen> {
    word.iter()
        .rev()
        .map(|g| match *g {
            Gen::T(i) => Gen::TInv(i),
            Gen::TInv(i) => Gen::T(i),
            // The duals are not inverted anywhere in this crate.
            other => panic!("cannot invert generator {other:?}"),
        })
        .collect()
}

/// `Y_i f`.
pub fn apply_y(p: &ParamSet, i: usize, f: &Poly) -> Result<Poly> {
    apply_word(p, &y_word(p.n, i), f)
}

/// `Y_i^{-1} f`.
pub fn apply_y_inv(p: &ParamSet, i: usize, f: &Poly) -> Result<Poly> {
    apply_word(p, &invert_word(&y_word(p.n, i)), f)
}

/// `Y^lam f` for an arbitrary integer vector `lam`, via the coordinatewise
/// factorization `Y^{lam} = prod_i Y_i^{lam_i}` (the `Y_i` commute).
pub fn apply_y_power(p: &ParamSet, lam: &[i64], f: &Poly) -> Result<Poly> {
    if lam.len() != p.n {
        return Err(Error::DimensionMismatch {
            expected: p.n,
            got: lam.len(),
        });
    }
    let mut g = f.clone();
    for (idx, &k) in lam.iter().enumerate() {
        let i = idx + 1;
        for _ in 0..k.abs() {
            g = if k > 0 {
                apply_y(p, i, &g)?
            } else {
                apply_y_inv(p, i, &g)?
            };
        }
    }
    Ok(g)
}

/// Intertwiner `S_i = [T_i, Y^{a_i}]` with `Y^{a_i} = Y_i Y_{i+1}^{-1}` for
/// `i < n` and `Y^{a_n} = Y_n^2`.
pub fn apply_si(p: &ParamSet, i: usize, f: &Poly) -> Result<Poly> {
    assert!((1..=p.n).contains(&i));
    let mut ai = vec![0i64; p.n];
    if i < p.n {
        ai[i - 1] = 1;
        ai[i] = -1;
    } else {
        ai[p.n - 1] = 2;
    }
    let a = apply_ti(p, i, &apply_y_power(p, &ai, f)?)?;
    let b = apply_y_power(p, &ai, &apply_ti(p, i, f)?)?;
    Ok(&a - &b)
}

/// `U_n = T_1 ... T_{n-1} T_n^v T_{n-1}^{-1} ... T_1^{-1}`.
pub fn apply_un(p: &ParamSet, f: &Poly) -> Result<Poly> {
    let mut word = Vec::new();
    for j in 1..p.n {
        word.push(Gen::T(j));
    }
    word.push(Gen::Tnv);
    for j in (1..p.n).rev() {
        word.push(Gen::TInv(j));
    }
    apply_word(p, &word, f)
}

/// `T_w` for a finite Weyl group element, via its reduced word.
pub fn apply_tw(p: &ParamSet, w: &SignedPermutation, f: &Poly) -> Result<Poly> {
    let u = crate::rootsys::AffineWeylElement::from_finite(w.clone());
    let word: Vec<Gen> = u.reduced_word()?.into_iter().map(Gen::T).collect();
    apply_word(p, &word, f)
}

/// Symmetrizer (`plus = true`) or anti-symmetrizer (`plus = false`):
/// `C_{+-} = (sum_w t_w^{+-2})^{-1} sum_w (+-1)^{l(w)} t_w^{+-1} T_w`.
pub fn apply_c(p: &ParamSet, plus: bool, f: &Poly) -> Result<Poly> {
    let mut acc = Poly::zero(p.n);
    let mut norm = Rat::zero();
    for w in SignedPermutation::enumerate(p.n) {
        let tw = t_w_finite(&w, &p.mult)?;
        let len = w.length();
        let (coeff, weight) = if plus {
            (tw.clone(), &tw * &tw)
        } else {
            let sign = if len % 2 == 0 { Rat::one() } else { -Rat::one() };
            (&sign * &tw.recip(), (&tw * &tw).recip())
        };
        norm += weight;
        acc = &acc + &apply_tw(p, &w, f)?.scale(&coeff);
    }
    Ok(acc.scale(&norm.recip()))
}

/// Whether `f` is invariant under the finite Weyl group.
pub fn is_w_invariant(f: &Poly) -> bool {
    let n = f.nvars();
    (1..=n).all(|i| f.act_weyl(&SignedPermutation::simple(n, i)) == *f)
}

/// Symmetric reduction of the Cherednik operators:
/// `L f = sum_i (Y_i + Y_i^{-1}) f - m_{eps_1}(gamma_0) f` on W-invariants.
pub fn apply_l_sym(p: &ParamSet, f: &Poly) -> Result<Poly> {
    if !is_w_invariant(f) {
        return Err(Error::NotInvariant);
    }
    let raw = apply_y_symmetric(p, f)?;
    let g0 = crate::koornwinder::gamma(p, &vec![0; p.n])?;
    let e0: Rat = g0.iter().map(|g| g + g.recip()).sum();
    Ok(&raw - &f.scale(&e0))
}

/// The raw operator `sum_i (Y_i + Y_i^{-1})` (no constant subtracted).
pub fn apply_y_symmetric(p: &ParamSet, f: &Poly) -> Result<Poly> {
    let mut acc = Poly::zero(p.n);
    for i in 1..=p.n {
        acc = &acc + &apply_y(p, i, f)?;
        acc = &acc + &apply_y_inv(p, i, f)?;
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Relation checker.
// ---------------------------------------------------------------------------

/// Braid length between simple indices in the affine C-type diagram:
/// 4 at the two ends, 3 for middle neighbours, 2 otherwise.
/// Braid order of the nodes `i < j` of the affine diagram; `0` encodes an
/// infinite bond (no braid relation), which happens between the two affine
/// ends in rank one.
fn braid_order(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = (i.min(j), i.max(j));
    if j != i + 1 {
        2
    } else if i == 0 && j == n {
        0
    } else if i == 0 || j == n {
        4
    } else {
        3
    }
}

fn alternate(word_len: usize, a: Gen, b: Gen) -> Vec<Gen> {
    (0..word_len)
        .map(|k| if k % 2 == 0 { a } else { b })
        .collect()
}

/// One named relation failure.
#[derive(Debug, Clone)]
pub struct RelationFailure {
    pub name: String,
}

/// Check the full set of algebra relations on a single test polynomial.
/// Returns the list of failed relation names (empty = all pass).
pub fn check_relations(p: &ParamSet, f: &Poly) -> Result<Vec<RelationFailure>> {
    let n = p.n;
    let mut failures = Vec::new();
    let mut check = |name: String, ok: bool| {
        if !ok {
            failures.push(RelationFailure { name });
        }
    };

    // Quadratic relations (T_i - t_i)(T_i + t_i^{-1}) = 0, and for the duals.
    for i in 0..=n {
        let ti = p.t_simple(i);
        let g = apply_ti(p, i, f)?;
        let lhs = &apply_ti(p, i, &g)? - &g.scale(&(&ti - ti.recip()));
        check(format!("quadratic T_{i}"), lhs == *f);
    }
    {
        let t0v = p.mult.t0v.clone();
        let g = apply_t0v(p, f)?;
        let lhs = &apply_t0v(p, &g)? - &g.scale(&(&t0v - t0v.recip()));
        check("quadratic T_0^v".into(), lhs == *f);
        let tnv = p.mult.tnv.clone();
        let g = apply_tnv(p, f)?;
        let lhs = &apply_tnv(p, &g)? - &g.scale(&(&tnv - tnv.recip()));
        check("quadratic T_n^v".into(), lhs == *f);
    }

    // Braid relations in both generator systems.
    for i in 0..=n {
        for j in (i + 1)..=n {
            let m = braid_order(n, i, j);
            if m == 0 {
                continue;
            }
            let lhs = apply_word(p, &alternate(m, Gen::T(i), Gen::T(j)), f)?;
            let rhs = apply_word(p, &alternate(m, Gen::T(j), Gen::T(i)), f)?;
            check(format!("braid T_{i} T_{j}"), lhs == rhs);
        }
    }
    {
        // Dual system (T_0^v, T_1, ..., T_{n-1}, T_n^v): same diagram.
        let dual_gen = |k: usize| -> Gen {
            if k == 0 {
                Gen::T0v
            } else if k == n {
                Gen::Tnv
            } else {
                Gen::T(k)
            }
        };
        for i in 0..=n {
            for j in (i + 1)..=n {
                let m = braid_order(n, i, j);
                if m == 0 {
                    continue;
                }
                let lhs = apply_word(p, &alternate(m, dual_gen(i), dual_gen(j)), f)?;
                let rhs = apply_word(p, &alternate(m, dual_gen(j), dual_gen(i)), f)?;
                check(format!("braid dual {i} {j}"), lhs == rhs);
            }
        }
    }

    // Cross commutation between the two affine ends.
    if n >= 2 {
        let w1 = [Gen::T(0), Gen::Tnv];
        let w2 = [Gen::Tnv, Gen::T(0)];
        check(
            "commute T_0 T_n^v".into(),
            apply_word(p, &w1, f)? == apply_word(p, &w2, f)?,
        );
        let w1 = [Gen::T0v, Gen::T(n)];
        let w2 = [Gen::T(n), Gen::T0v];
        check(
            "commute T_0^v T_n".into(),
            apply_word(p, &w1, f)? == apply_word(p, &w2, f)?,
        );
    }

    // Compatibility word: T_n^v T_n T_{n-1} ... T_1 T_0 T_0^v T_1 ... T_{n-1}
    // acts as multiplication by qh^{-1}.
    {
        let mut word = vec![Gen::Tnv, Gen::T(n)];
        for j in (1..n).rev() {
            word.push(Gen::T(j));
        }
        word.push(Gen::T(0));
        word.push(Gen::T0v);
        for j in 1..n {
            word.push(Gen::T(j));
        }
        let lhs = apply_word(p, &word, f)?;
        check("compatibility word".into(), lhs == f.scale(&p.qh.recip()));
    }

    // Commutativity of the Cherednik operators.
    for i in 1..=n {
        for j in (i + 1)..=n {
            let a = apply_y(p, i, &apply_y(p, j, f)?)?;
            let b = apply_y(p, j, &apply_y(p, i, f)?)?;
            check(format!("commute Y_{i} Y_{j}"), a == b);
        }
    }
    for i in 1..=n {
        check(
            format!("Y_{i} invertible"),
            apply_y_inv(p, i, &apply_y(p, i, f)?)? == *f,
        );
    }

    // Multiplication cross relation: for g = x_1 and 0 <= i <= n,
    //   g T_i(h) - T_i((s_i g) h)
    // = [(t_i - t_i^{-1}) + (t_{a_i/2} - t_{a_i/2}^{-1}) x^{a_i/2}] D_{a_i}(g) h.
    for i in 0..=n {
        let ai = simple_root(n, i);
        let g = Poly::var(n, 0);
        let si_g = g.act_reflection(&ai, &p.qh);
        let lhs = &(&g * &apply_ti(p, i, f)?) - &apply_ti(p, i, &(&si_g * f))?;
        let ti = p.t_simple(i);
        let mut bracket = Poly::constant(n, &ti - ti.recip());
        if let Some(h) = ai.half() {
            let th = p.mult.of_root(&h)?;
            bracket.add_term(
                Exponent(h.grad.clone()),
                (&th - th.recip()) * p.qh.powi(h.half_delta),
            );
        }
        let rhs = &(&bracket * &g.divided_difference(&ai, &p.qh)) * f;
        check(format!("cross relation x T_{i}"), lhs == rhs);
    }

    // Spectral cross relation, dual parameters: for F(Y) = Y_i and each j,
    //   T_j F(Y) - (s_j F)(Y) T_j
    // = [(tt_j - tt_j^{-1}) + (tt_{a_j/2} - tt_{a_j/2}^{-1}) Y^{-a_j/2}]
    //   * (F(Y) - (s_j F)(Y)) / (1 - Y^{-a_j}),
    // where tt are the dual parameters.  For F = Y_i the right side collapses
    // to a two-term polynomial in the Y's.
    {
        let dual = p.mult.dual();
        for i in 1..=n {
            for j in 1..=n {
                let lhs = {
                    let a = apply_y(p, i, f)?;
                    let a = apply_ti(p, j, &a)?;
                    // (s_j F)(Y): s_j permutes/inverts the Y-index.
                    let b = apply_ti(p, j, f)?;
                    let b = apply_y_sj_of_yi(p, i, j, &b)?;
                    &a - &b
                };
                let rhs = spectral_cross_rhs(p, &dual, i, j, f)?;
                check(format!("spectral cross Y_{i} T_{j}"), lhs == rhs);
            }
        }
    }

    Ok(failures)
}

/// Apply `(s_j Y^{eps_i})`, i.e. `Y^{s_j eps_i}`.
fn apply_y_sj_of_yi(p: &ParamSet, i: usize, j: usize, f: &Poly) -> Result<Poly> {
    let n = p.n;
    let mut e = vec![0i64; n];
    e[i - 1] = 1;
    let se = SignedPermutation::simple(n, j).apply_weight(&e);
    apply_y_power(p, &se, f)
}

/// Right side of the spectral cross relation for `F = Y^{eps_i}`:
/// `[(tt_j - tt_j^{-1}) + (tt_{a_j/2} - tt_{a_j/2}^{-1}) Y^{-a_j/2}]`
/// times `(F(Y) - (s_j F)(Y)) / (1 - Y^{-a_j})`.  The quotient is the
/// divided difference along `-a_j`, computed formally in the Y-exponents and
/// then applied through `Y^mu`.
fn spectral_cross_rhs(
    p: &ParamSet,
    dual: &MultiplicityData,
    i: usize,
    j: usize,
    f: &Poly,
) -> Result<Poly> {
    let n = p.n;
    let aj = simple_root(n, j);
    let formal = LaurentPoly::<Rat>::monomial(Exponent::unit(n, i - 1), Rat::one());
    let quotient = formal.divided_difference(&aj.neg(), &p.qh);
    let mut bracket = LaurentPoly::<Rat>::constant(n, {
        let tj = dual.of_root(&aj)?;
        &tj - tj.recip()
    });
    if let Some(h) = aj.half() {
        let th = dual.of_root(&h)?;
        bracket.add_term(
            Exponent(h.grad.iter().map(|x| -x).collect()),
            &th - th.recip(),
        );
    }
    let formal_rhs = &bracket * &quotient;
    let mut out = Poly::zero(n);
    for (mu, c) in formal_rhs.iter() {
        out = &out + &apply_y_power(p, &mu.0, f)?.scale(c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    pub fn params_rank2() -> ParamSet {
        ParamSet::new(
            2,
            ratio(1, 2),
            MultiplicityData {
                t0: ratio(3, 5),
                t0v: ratio(2, 3),
                t: ratio(2, 5),
                tn: ratio(1, 2),
                tnv: ratio(4, 5),
            },
        )
        .unwrap()
    }

    fn xpow(e: Vec<i64>) -> Poly {
        Poly::monomial(Exponent(e), Rat::one())
    }

    #[test]
    fn abcd_parametrization() {
        let p = params_rank2();
        assert_eq!(
            p.abcd(),
            [ratio(1, 5), ratio(-9, 20), ratio(2, 5), ratio(-5, 8)]
        );
    }

    #[test]
    fn ti_on_constants_and_simple_monomials() {
        let p = params_rank2();
        let one = Poly::one(2);
        for i in 0..=2 {
            assert_eq!(apply_ti(&p, i, &one).unwrap(), one.scale(&p.t_simple(i)));
        }
        // T_1 x_2^{-1} = t^{-1} x_1^{-1} (used by the U_n word).
        let g = apply_ti(&p, 1, &xpow(vec![0, -1])).unwrap();
        assert_eq!(g, xpow(vec![-1, 0]).scale(&p.mult.t.recip()));
    }

    #[test]
    fn ti_inverse_roundtrip() {
        let p = params_rank2();
        let f = &xpow(vec![2, -1]) + &xpow(vec![0, 1]).scale(&rat(3));
        for i in 0..=2 {
            let g = apply_ti(&p, i, &f).unwrap();
            assert_eq!(apply_ti_inv(&p, i, &g).unwrap(), f);
        }
    }

    #[test]
    fn y_on_constant_gives_dominant_spectrum() {
        let p = params_rank2();
        let one = Poly::one(2);
        // Y_i(1) = t0 tn t^{2(n-i)} * 1.
        let g1 = apply_y(&p, 1, &one).unwrap();
        let expect1 = &p.mult.t0 * &p.mult.tn * &p.mult.t * &p.mult.t;
        assert_eq!(g1, one.scale(&expect1));
        let g2 = apply_y(&p, 2, &one).unwrap();
        let expect2 = &p.mult.t0 * &p.mult.tn;
        assert_eq!(g2, one.scale(&expect2));
    }

    #[test]
    fn y_triangular_with_correct_leading_coefficient() {
        // Y_i x^lam = gamma_lam^{eps_i} x^lam + lower order terms.
        let p = params_rank2();
        for lam in [vec![1, 0], vec![0, 1], vec![-1, 0], vec![1, -1], vec![2, 1]] {
            let gam = crate::koornwinder::gamma(&p, &lam).unwrap();
            for i in 1..=2 {
                let g = apply_y(&p, i, &xpow(lam.clone())).unwrap();
                assert_eq!(g.coeff(&Exponent(lam.clone())), gam[i - 1]);
                for e in g.support() {
                    assert!(
                        crate::rootsys::preceq(&e.0, &lam),
                        "support {e:?} escapes the downset of {lam:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn full_relation_suite_on_random_polynomials() {
        use rand::{Rng, SeedableRng};
        let p = params_rank2();
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..3 {
            let mut f = Poly::zero(2);
            for _ in 0..4 {
                f.add_term(
                    Exponent(vec![rng.gen_range(-2..=2), rng.gen_range(-2..=2)]),
                    rat(rng.gen_range(-4..=4)),
                );
            }
            let failures = check_relations(&p, &f).unwrap();
            assert!(failures.is_empty(), "failed: {failures:?}");
        }
    }

    #[test]
    fn symmetrizer_produces_invariants_and_is_idempotent() {
        let p = params_rank2();
        let f = &xpow(vec![1, 0]) + &xpow(vec![0, -2]).scale(&rat(2));
        let g = apply_c(&p, true, &f).unwrap();
        assert!(is_w_invariant(&g));
        assert_eq!(apply_c(&p, true, &g).unwrap(), g);
        // T_i C_+ = t_i C_+.
        for i in 1..=2 {
            assert_eq!(apply_ti(&p, i, &g).unwrap(), g.scale(&p.t_simple(i)));
        }
        // Anti-symmetrizer: T_i C_- = -t_i^{-1} C_-.
        let h = apply_c(&p, false, &f).unwrap();
        assert_eq!(apply_c(&p, false, &h).unwrap(), h);
        for i in 1..=2 {
            assert_eq!(
                apply_ti(&p, i, &h).unwrap(),
                h.scale(&-p.t_simple(i).recip())
            );
        }
    }
}
