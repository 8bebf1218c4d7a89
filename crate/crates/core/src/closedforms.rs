//! Closed-form product identities: evaluation formulas at the base point,
//! quadratic norm ratios, expansion coefficients of the (anti)symmetric
//! families over the monic one, and the constant term.
//!
//! Everything here is a finite product of rational factors built from the
//! parameters and the spectral vectors, evaluated exactly over the rationals
//! (the only exception is the constant term, an infinite product that is
//! truncated in floating point).  The companion modules verify these products
//! against the polynomials themselves: exact evaluation in `koornwinder`,
//! numerical pairings in `torusquad`.
//!
//! Design notes: the rational weight `v_beta` is the single building block;
//! all products walk explicit root sets (finite inversion sets, truncated
//! translation inversion sets) rather than manipulating symbolic products, so
//! each formula is a direct transcription of its product form.

use crate::heckeops::ParamSet;
use crate::koornwinder::{gamma, invert_point, point_pow, x_base};
use crate::rootsys::{
    self, inversion_set_finite, inversion_set_translation, lambda_plus, sigma_plus, t_w,
    t_w_finite, w_lambda, AffineRoot, AffineWeylElement,
};
use crate::scalar::{rat_to_f64, Scalar};
use crate::{Error, Rat, Result};
use num_traits::{One, Zero};

/// Finite q-shifted factorial `(y; q)_k = prod_{j=0}^{k-1} (1 - y q^j)`.
pub fn qpoch(y: &Rat, q: &Rat, k: i64) -> Rat {
    assert!(k >= 0, "finite q-shifted factorial needs k >= 0");
    let mut acc = Rat::one();
    let mut yq = y.clone();
    for _ in 0..k {
        acc *= Rat::one() - &yq;
        yq *= q;
    }
    acc
}

/// Truncated infinite q-shifted factorial `(y; q)_inf`, in floating point.
pub fn qpoch_f64(y: f64, q: f64, trunc: usize) -> f64 {
    let mut acc = 1.0;
    let mut yq = y;
    for _ in 0..trunc {
        acc *= 1.0 - yq;
        yq *= q;
    }
    acc
}

/// The rational weight
/// `v_beta(x) = (1 - t_beta t_{beta/2} x^{beta/2})(1 + t_beta t_{beta/2}^{-1} x^{beta/2}) / (1 - x^beta)`,
/// which reduces to `(1 - t_beta^2 x^beta)/(1 - x^beta)` when `beta/2` is not
/// a root, evaluated at a rational point (`delta` evaluates to `q`).
pub fn v_eval(p: &ParamSet, beta: &AffineRoot, point: &[Rat]) -> Result<Rat> {
    let tb = p.mult.of_root(beta)?;
    let (num, den) = match beta.half() {
        Some(h) => {
            let th = p.mult.of_half_root(beta)?;
            let xh = point_pow(point, &h, &p.qh);
            let num = (Rat::one() - &tb * &th * &xh) * (Rat::one() + &tb * th.recip() * &xh);
            (num, Rat::one() - &xh * &xh)
        }
        None => {
            let xb = point_pow(point, beta, &p.qh);
            (Rat::one() - &tb * &tb * &xb, Rat::one() - xb)
        }
    };
    if den.is_zero() {
        return Err(Error::Pole(format!("v_{beta:?} has a pole at {point:?}")));
    }
    Ok(num / den)
}

/// The rational function `C(x) = prod_{alpha in Sigma-} v_alpha(x)`.
pub fn c_eval(p: &ParamSet, point: &[Rat]) -> Result<Rat> {
    let mut acc = Rat::one();
    for alpha in sigma_plus(p.n) {
        acc *= v_eval(p, &alpha.neg(), point)?;
    }
    Ok(acc)
}

/// The constant `K = sum_{w in W} (w C)(x) = C(x_0^{-1})`.
pub fn k_const(p: &ParamSet) -> Result<Rat> {
    c_eval(p, &invert_point(&x_base(p)?))
}

/// The coefficients in `T_i P_lam = xi_i(gamma_lam) P_lam +
/// eta_i(gamma_lam) P_{s_i lam}` for a non-affine generator `i`:
/// `xi_i(x) = t~_i - t~_i^{-1} v~_{-a_i}(x)` and `eta_i(gamma_lam)` is `t~_i`
/// when `<lam, a_i> < 0`, else `t~_i^{-3} v~_{a_i}(gamma_lam) v~_{-a_i}(gamma_lam)`.
pub fn xi_eta(p: &ParamSet, lam: &[i64], i: usize) -> Result<(Rat, Rat)> {
    if i == 0 || i > p.n {
        return Err(Error::Internal(format!("xi/eta wants 1 <= i <= n, got {i}")));
    }
    let pd = p.dual();
    let gam = gamma(p, lam)?;
    let ai = rootsys::simple_root(p.n, i);
    let ti = pd.t_simple(i);
    let v_neg = v_eval(&pd, &ai.neg(), &gam)?;
    let xi = &ti - &(ti.recip() * &v_neg);
    let eta = if ai.pair_weight(lam) < 0 {
        ti
    } else {
        ti.powi(-3) * v_eval(&pd, &ai, &gam)? * v_neg
    };
    Ok((xi, eta))
}

/// Expansion coefficient of the symmetric (`plus`) or anti-symmetric family
/// over the monic non-symmetric one:
/// `c+-_{lam, mu} = (+-1)^{l(w_mu)} t~_{w_mu}^{-2}
/// prod_{alpha in Sigma+, <mu, alpha> < 0} v~_{+-alpha}(gamma_mu)`.
pub fn c_coefficient(p: &ParamSet, mu: &[i64], plus: bool) -> Result<Rat> {
    let pd = p.dual();
    let wmu = w_lambda(mu);
    let gam = gamma(p, mu)?;
    let mut acc = t_w_finite(&wmu, &pd.mult)?.powi(-2);
    if !plus && wmu.length() % 2 == 1 {
        acc = -acc;
    }
    for alpha in sigma_plus(p.n) {
        if alpha.pair_weight(mu) < 0 {
            let arg = if plus { alpha } else { alpha.neg() };
            acc *= v_eval(&pd, &arg, &gam)?;
        }
    }
    Ok(acc)
}

/// Quadratic norm ratio of the renormalized symmetric family,
/// `<E+(gamma_lam), E+(gamma_lam)>_+ / <1, 1>_+`, as the explicit product in
/// the Askey-Wilson style parameters `a, b, c, d, t, q`.
pub fn norm_ratio_sym(p: &ParamSet, lam: &[i64]) -> Result<Rat> {
    if !rootsys::is_dominant(lam) {
        return Err(Error::NotDominant(lam.to_vec()));
    }
    let n = p.n as i64;
    let [a, b, c, d] = p.abcd();
    let t = &p.mult.t;
    let q = p.q();
    let qinv = q.recip();
    let abcd = &a * &b * &c * &d;
    let mut acc = Rat::one();
    for i in 1..=n {
        let li = lam[(i - 1) as usize];
        let t2 = t.powi(2 * (n - i));
        let t4 = t.powi(4 * (n - i));
        acc *= qpoch(&(&qinv * &abcd * &t4), &q, 2 * li) * (&c * &c * &t4).powi(li)
            / qpoch(&(&abcd * &t4), &q, 2 * li);
        acc *= qpoch(&(&q * &t2), &q, li)
            * qpoch(&(&a * &b * &t2), &q, li)
            * qpoch(&(&a * &d * &t2), &q, li)
            * qpoch(&(&b * &d * &t2), &q, li);
        acc /= qpoch(&(&a * &c * &t2), &q, li)
            * qpoch(&(&b * &c * &t2), &q, li)
            * qpoch(&(&c * &d * &t2), &q, li)
            * qpoch(&(&qinv * &abcd * &t2), &q, li);
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            let (li, lj) = (lam[(i - 1) as usize], lam[(j - 1) as usize]);
            acc *= qpoch(&(&abcd * t.powi(2 * (2 * n - i - j - 1))), &q, li + lj)
                * qpoch(&(&qinv * &abcd * t.powi(2 * (2 * n - i - j))), &q, li + lj)
                / (qpoch(&(&abcd * t.powi(2 * (2 * n - i - j))), &q, li + lj)
                    * qpoch(&(&qinv * &abcd * t.powi(2 * (2 * n - i - j + 1))), &q, li + lj));
            acc *= qpoch(&(&q * t.powi(2 * (j - i - 1))), &q, li - lj)
                * qpoch(&t.powi(2 * (j - i)), &q, li - lj)
                / (qpoch(&(&q * t.powi(2 * (j - i))), &q, li - lj)
                    * qpoch(&t.powi(2 * (j - i + 1)), &q, li - lj));
        }
    }
    Ok(acc)
}

/// The translation `tau(-lam)` for dominant `lam`.
fn tau_minus(lam: &[i64]) -> AffineWeylElement {
    let neg: Vec<i64> = lam.iter().map(|x| -x).collect();
    AffineWeylElement::from_translation(&neg)
}

/// Evaluation of the symmetric family at the base point, via the general
/// weight-ratio product:
/// `P+_lam(x_0) = [w~_+(gamma_lam^{-1}) / w~_+(gamma_0^{-1})]
/// t~_{tau(-lam)}^{-1} prod_{beta in R+ inter tau(lam) R-} v~_beta(gamma_lam^{-1})`.
pub fn eval_sym(p: &ParamSet, lam: &[i64]) -> Result<Rat> {
    if !rootsys::is_dominant(lam) {
        return Err(Error::NotDominant(lam.to_vec()));
    }
    let pd = p.dual();
    let gam_inv = invert_point(&gamma(p, lam)?);
    let mut acc = norm_ratio_sym(p, lam)?.recip() * t_w(&tau_minus(lam), &pd.mult)?.recip();
    for beta in inversion_set_translation(lam)? {
        acc *= v_eval(&pd, &beta, &gam_inv)?;
    }
    Ok(acc)
}

/// Evaluation of the symmetric family at the base point, as the fully
/// explicit product in the parameters `a, b, c, d, t, q`.
pub fn eval_sym_product(p: &ParamSet, lam: &[i64]) -> Result<Rat> {
    if !rootsys::is_dominant(lam) {
        return Err(Error::NotDominant(lam.to_vec()));
    }
    let n = p.n as i64;
    let [a, b, c, d] = p.abcd();
    let t = &p.mult.t;
    let q = p.q();
    let qinv = q.recip();
    let abcd = &a * &b * &c * &d;
    let mut acc = Rat::one();
    for i in 1..=n {
        let li = lam[(i - 1) as usize];
        let t2 = t.powi(2 * (n - i));
        let t4 = t.powi(4 * (n - i));
        acc *= qpoch(&(&a * &c * &t2), &q, li)
            * qpoch(&(&b * &c * &t2), &q, li)
            * qpoch(&(&c * &d * &t2), &q, li)
            * qpoch(&(&qinv * &abcd * &t2), &q, li)
            / (qpoch(&(&qinv * &abcd * &t4), &q, 2 * li) * (&c * &t2).powi(li));
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            let (li, lj) = (lam[(i - 1) as usize], lam[(j - 1) as usize]);
            acc *= qpoch(&(&qinv * &abcd * t.powi(2 * (2 * n - i - j + 1))), &q, li + lj)
                * qpoch(&t.powi(2 * (j - i + 1)), &q, li - lj)
                / (qpoch(&(&qinv * &abcd * t.powi(2 * (2 * n - i - j))), &q, li + lj)
                    * qpoch(&t.powi(2 * (j - i)), &q, li - lj));
        }
    }
    Ok(acc)
}

/// Ratio of discrete weights `w~(gamma_lam^{-1}) / w~(gamma_0^{-1})`:
/// the full weight factors through the symmetric one as
/// `w~(gamma_lam^{-1}) = C~(gamma_lam^{-1}) w~_+(gamma_{lam+}^{-1})`, and the
/// symmetric ratio is the reciprocal of the symmetric norm ratio.
pub fn weight_ratio(p: &ParamSet, lam: &[i64]) -> Result<Rat> {
    let pd = p.dual();
    let gam_inv = invert_point(&gamma(p, lam)?);
    let ktilde = c_eval(&pd, &invert_point(&gamma(p, &vec![0; p.n])?))?;
    Ok(c_eval(&pd, &gam_inv)? / ktilde / norm_ratio_sym(p, &lambda_plus(lam))?)
}

/// Evaluation of the monic non-symmetric family at the inverted base point:
/// `P_lam(x_0^{-1}) = [w~(gamma_lam^{-1}) / w~(gamma_0^{-1})] t~_{w_lam}^2
/// t~_{tau(-lam+)}^{-1} prod_beta v~_beta(gamma_{lam+}^{-1})` with the product
/// over `(R+ inter tau(lam+) R-)` minus `(Sigma+ inter w_lam^{-1} Sigma-)`.
pub fn eval_ns(p: &ParamSet, lam: &[i64]) -> Result<Rat> {
    let pd = p.dual();
    let lp = lambda_plus(lam);
    let wl = w_lambda(lam);
    let fin_set = inversion_set_finite(&wl);
    let gam_p_inv = invert_point(&gamma(p, &lp)?);
    let mut acc = weight_ratio(p, lam)?
        * t_w_finite(&wl, &pd.mult)?.powi(2)
        * t_w(&tau_minus(&lp), &pd.mult)?.recip();
    for beta in inversion_set_translation(&lp)? {
        if beta.half_delta == 0 && fin_set.contains(&beta) {
            continue;
        }
        acc *= v_eval(&pd, &beta, &gam_p_inv)?;
    }
    Ok(acc)
}

/// Diagonal term of the bi-orthogonality pairing,
/// `<E(gamma_lam), E'(gamma_lam^{-1})> / <1, 1> = w~(gamma_0^{-1}) / w~(gamma_lam^{-1})`.
pub fn norm_ratio_ns(p: &ParamSet, lam: &[i64]) -> Result<Rat> {
    Ok(weight_ratio(p, lam)?.recip())
}

/// The exact right-hand side of the norm relations for strictly dominant
/// `lam`: `prod_{alpha in Sigma+} v~_alpha(gamma_lam^{-1}) / v~_alpha(gamma_lam)`.
pub fn norm_relation_product(p: &ParamSet, lam: &[i64]) -> Result<Rat> {
    if !rootsys::is_strictly_dominant(lam) {
        return Err(Error::NotStrictlyDominant(lam.to_vec()));
    }
    let pd = p.dual();
    let gam = gamma(p, lam)?;
    let gam_inv = invert_point(&gam);
    let mut acc = Rat::one();
    for alpha in sigma_plus(p.n) {
        acc *= v_eval(&pd, &alpha, &gam_inv)? / v_eval(&pd, &alpha, &gam)?;
    }
    Ok(acc)
}

/// The constant term `<1, 1>_+ / |W|` as a truncated infinite product:
/// `prod_{j=1}^n (t^2, t^{2(2n-j-1)} abcd; q)_inf /
/// (q, t^{2(n-j+1)}, t^{2(n-j)} {ab, ac, ad, bc, bd, cd}; q)_inf`.
pub fn gustafson_ct(p: &ParamSet, trunc: usize) -> f64 {
    let n = p.n as i64;
    let [a, b, c, d] = p.abcd().map(|x| rat_to_f64(&x));
    let t = rat_to_f64(&p.mult.t);
    let q = rat_to_f64(&p.q());
    let abcd = a * b * c * d;
    let mut acc = 1.0;
    for j in 1..=n {
        let t2 = t.powi(2 * (n - j) as i32);
        acc *= qpoch_f64(t * t, q, trunc) * qpoch_f64(t.powi(2 * (2 * n - j - 1) as i32) * abcd, q, trunc);
        acc /= qpoch_f64(q, q, trunc)
            * qpoch_f64(t.powi(2 * (n - j + 1) as i32), q, trunc)
            * qpoch_f64(t2 * a * b, q, trunc)
            * qpoch_f64(t2 * a * c, q, trunc)
            * qpoch_f64(t2 * a * d, q, trunc)
            * qpoch_f64(t2 * b * c, q, trunc)
            * qpoch_f64(t2 * b * d, q, trunc)
            * qpoch_f64(t2 * c * d, q, trunc);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::koornwinder::{compute_ns, compute_sym};
    use crate::rootsys::{weyl_orbit, MultiplicityData, SignedPermutation};
    use crate::scalar::ratio;

    fn params_rank2() -> ParamSet {
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

    #[test]
    fn qpoch_basics() {
        let q = ratio(1, 2);
        let y = ratio(1, 3);
        assert_eq!(qpoch(&y, &q, 0), Rat::one());
        assert_eq!(
            qpoch(&y, &q, 2),
            (Rat::one() - &y) * (Rat::one() - &y * &q)
        );
        assert!((qpoch_f64(0.0, 0.5, 40) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn v_reduces_for_mid_roots() {
        let p = params_rank2();
        let alpha = AffineRoot::new(vec![1, -1], 0);
        let point = vec![ratio(3, 7), ratio(5, 9)];
        let xa = point_pow(&point, &alpha, &p.qh);
        let t2 = &p.mult.t * &p.mult.t;
        let expect = (Rat::one() - &t2 * &xa) / (Rat::one() - xa);
        assert_eq!(v_eval(&p, &alpha, &point).unwrap(), expect);
        // Poles are reported.
        assert!(v_eval(&p, &alpha, &vec![ratio(1, 4), ratio(1, 4)]).is_err());
    }

    #[test]
    fn sum_of_weyl_translates_of_c_is_constant() {
        let p = params_rank2();
        let k = k_const(&p).unwrap();
        for point in [
            vec![ratio(3, 7), ratio(5, 9)],
            vec![ratio(-2, 3), ratio(7, 4)],
        ] {
            let total: Rat = SignedPermutation::enumerate(2)
                .iter()
                .map(|w| c_eval(&p, &w.inverse().apply_point(&point)).unwrap())
                .sum();
            assert_eq!(total, k);
        }
    }

    #[test]
    fn xi_matches_its_quotient_form() {
        // xi_i(x) = [(t~_{a_i}^{-1} - t~_{a_i}) x^{a_i}
        //           + (t~_{a_i/2}^{-1} - t~_{a_i/2}) x^{a_i/2}] / (1 - x^{a_i}).
        let p = params_rank2();
        let pd = p.dual();
        for lam in [vec![2, -1], vec![0, 3], vec![-1, -2]] {
            let gam = gamma(&p, &lam).unwrap();
            for i in 1..=2usize {
                let ai = rootsys::simple_root(2, i);
                let ta = pd.mult.of_root(&ai).unwrap();
                let xa = point_pow(&gam, &ai, &p.qh);
                let mut num = (ta.recip() - &ta) * &xa;
                if let Some(h) = ai.half() {
                    let th = pd.mult.of_root(&h).unwrap();
                    num += (th.recip() - &th) * point_pow(&gam, &h, &p.qh);
                }
                let expect = num / (Rat::one() - xa);
                let (xi, _) = xi_eta(&p, &lam, i).unwrap();
                assert_eq!(xi, expect);
            }
        }
    }

    #[test]
    fn expansion_coefficients_match_their_second_form() {
        // The alternative form evaluates the same product at the inverted
        // dominant spectral vector over the finite inversion set of w_mu.
        let p = params_rank2();
        let pd = p.dual();
        for lam in [vec![2, 1], vec![1, 0]] {
            let gam_inv = invert_point(&gamma(&p, &lam).unwrap());
            for mu in weyl_orbit(&lam) {
                let wmu = w_lambda(&mu);
                for plus in [true, false] {
                    let mut expect = t_w_finite(&wmu, &pd.mult).unwrap().powi(-2);
                    if !plus && wmu.length() % 2 == 1 {
                        expect = -expect;
                    }
                    for alpha in inversion_set_finite(&wmu) {
                        let arg = if plus { alpha } else { alpha.neg() };
                        expect *= v_eval(&pd, &arg, &gam_inv).unwrap();
                    }
                    assert_eq!(c_coefficient(&p, &mu, plus).unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn symmetric_evaluation_routes_agree() {
        let p = params_rank2();
        for lam in [vec![0, 0], vec![1, 0], vec![1, 1], vec![2, 1]] {
            assert_eq!(
                eval_sym(&p, &lam).unwrap(),
                eval_sym_product(&p, &lam).unwrap(),
                "at {lam:?}"
            );
        }
    }

    #[test]
    fn symmetric_evaluation_via_word_product() {
        // Independent route: walk a reduced word of tau(-lam), multiplying
        // t~_i^{-1} v~_{a_i} at the successively dot-shifted spectral vectors.
        let p = params_rank2();
        let pd = p.dual();
        for lam in [vec![1, 0], vec![2, 1]] {
            let word = tau_minus(&lam).reduced_word().unwrap();
            let mut nu = lam.clone();
            let mut prod = Rat::one();
            for &i in word.iter().rev() {
                let ai = rootsys::simple_root(2, i);
                let gam_inv = invert_point(&gamma(&p, &nu).unwrap());
                prod *= pd.mult.of_root(&ai).unwrap().recip()
                    * v_eval(&pd, &ai, &gam_inv).unwrap();
                nu = AffineWeylElement::simple(2, i).dot(&nu);
            }
            assert_eq!(nu, vec![0, 0]);
            let expect = eval_sym(&p, &lam).unwrap() * norm_ratio_sym(&p, &lam).unwrap();
            assert_eq!(prod, expect);
        }
    }

    #[test]
    fn evaluation_formulas_match_the_polynomials() {
        let p = params_rank2();
        let x0 = x_base(&p).unwrap();
        let x0_inv = invert_point(&x0);
        for lam in [vec![0, 0], vec![1, 0], vec![0, -1], vec![1, -1], vec![-1, -1]] {
            let direct = compute_ns(&p, &lam).unwrap().eval(&x0_inv);
            assert_eq!(eval_ns(&p, &lam).unwrap(), direct, "ns at {lam:?}");
        }
        for lam in [vec![1, 0], vec![1, 1], vec![2, 1]] {
            let direct = compute_sym(&p, &lam).unwrap().eval(&x0);
            assert_eq!(eval_sym(&p, &lam).unwrap(), direct, "sym at {lam:?}");
            // The same value at the inverted base point.
            let inv = compute_sym(&p, &lam).unwrap().eval(&x0_inv);
            assert_eq!(inv, direct, "sym inversion symmetry at {lam:?}");
        }
    }

    #[test]
    fn gustafson_rank_one_reduces_to_askey_wilson() {
        // For n = 1 the product is the Askey-Wilson constant term
        // (abcd; q)_inf / (q, ab, ac, ad, bc, bd, cd; q)_inf.
        let p = ParamSet::new(
            1,
            ratio(1, 2),
            MultiplicityData {
                t0: ratio(3, 5),
                t0v: ratio(2, 3),
                t: ratio(2, 5),
                tn: ratio(1, 2),
                tnv: ratio(4, 5),
            },
        )
        .unwrap();
        let [a, b, c, d] = p.abcd().map(|x| rat_to_f64(&x));
        let q = 0.25f64;
        let m = 60;
        let expect = qpoch_f64(a * b * c * d, q, m)
            / (qpoch_f64(q, q, m)
                * qpoch_f64(a * b, q, m)
                * qpoch_f64(a * c, q, m)
                * qpoch_f64(a * d, q, m)
                * qpoch_f64(b * c, q, m)
                * qpoch_f64(b * d, q, m)
                * qpoch_f64(c * d, q, m));
        assert!((gustafson_ct(&p, m) - expect).abs() < 1e-12);
    }
}
