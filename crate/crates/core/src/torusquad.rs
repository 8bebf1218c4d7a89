//! Numerical verification layer: torus quadrature for the bi-orthogonality
//! pairings, contour-integral residue weights, and the discrete transform
//! pair built from them.
//!
//! The pairings are integrals over the unit torus against the densities
//! `Delta` and `Delta_+`; a polynomial integrand times an analytic density is
//! resolved with spectral accuracy by the tensor grid of `N`-th roots of
//! unity.  The full density is evaluated in a rearranged product form that is
//! analytic on the torus (the naive quotient of the anti-invariant prefactor
//! and `Delta_+` is 0/0 at coinciding or unimodular coordinates); the
//! rearrangement is verified against the defining product at random off-grid
//! points.  Discrete weights are nested residues of the density at geometric
//! progressions of the spectral points, computed by small-circle contour
//! quadrature with radii chosen from the explicit candidate pole sets.

use crate::closedforms::{k_const, norm_ratio_sym};
use crate::exactring::Exponent;
use crate::heckeops::ParamSet;
use crate::koornwinder::{gamma, invert_point, normalize_e};
use crate::rootsys::{n_lambda, sigma_plus, AffineRoot};
use crate::scalar::rat_to_f64;
use crate::{C64, Error, Poly, Rat, Result};
use std::collections::BTreeMap;

pub fn c64(r: &Rat) -> C64 {
    C64::new(rat_to_f64(r), 0.0)
}

pub fn point_c64(v: &[Rat]) -> Vec<C64> {
    v.iter().map(c64).collect()
}

/// Evaluate an exact polynomial at a complex point.
pub fn eval_poly(f: &Poly, x: &[C64]) -> C64 {
    let mut acc = C64::new(0.0, 0.0);
    for (e, coeff) in f.iter() {
        let mut term = c64(coeff);
        for (&k, xi) in e.0.iter().zip(x) {
            if k != 0 {
                term *= xi.powi(k as i32);
            }
        }
        acc += term;
    }
    acc
}

/// Truncated `(y; q)_inf` over the complex numbers.
pub fn qpoch_c(y: C64, q: f64, trunc: usize) -> C64 {
    let mut acc = C64::new(1.0, 0.0);
    let mut yq = y;
    for _ in 0..trunc {
        acc *= C64::new(1.0, 0.0) - yq;
        yq *= q;
    }
    acc
}

/// Value of `x^beta` at a complex point (`delta` evaluating to `q = qh^2`).
pub fn point_pow_c(x: &[C64], beta: &AffineRoot, qh: f64) -> C64 {
    let mut acc = C64::new(qh, 0.0).powi(beta.half_delta as i32);
    for (xi, &g) in x.iter().zip(&beta.grad) {
        if g != 0 {
            acc *= xi.powi(g as i32);
        }
    }
    acc
}

/// Numerical `v_beta(x)` for a finite root `beta`.
pub fn v_c(p: &ParamSet, beta: &AffineRoot, x: &[C64]) -> Result<C64> {
    let tb = rat_to_f64(&p.mult.of_root(beta)?);
    let qh = rat_to_f64(&p.qh);
    Ok(match beta.half() {
        Some(h) => {
            let th = rat_to_f64(&p.mult.of_half_root(beta)?);
            let xh = point_pow_c(x, &h, qh);
            (C64::new(1.0, 0.0) - tb * th * xh) * (C64::new(1.0, 0.0) + tb / th * xh)
                / (C64::new(1.0, 0.0) - xh * xh)
        }
        None => {
            let xb = point_pow_c(x, beta, qh);
            (C64::new(1.0, 0.0) - tb * tb * xb) / (C64::new(1.0, 0.0) - xb)
        }
    })
}

/// Numerical `C(x) = prod_{alpha in Sigma-} v_alpha(x)`.
pub fn c_fn(p: &ParamSet, x: &[C64]) -> Result<C64> {
    let mut acc = C64::new(1.0, 0.0);
    for alpha in sigma_plus(p.n) {
        acc *= v_c(p, &alpha.neg(), x)?;
    }
    Ok(acc)
}

fn f64_params(p: &ParamSet) -> (f64, f64, [f64; 4]) {
    let q = rat_to_f64(&p.q());
    let t = rat_to_f64(&p.mult.t);
    let abcd = p.abcd().map(|v| rat_to_f64(&v));
    (q, t * t, abcd)
}

/// The symmetric density `Delta_+` as its explicit product.
pub fn delta_plus(p: &ParamSet, x: &[C64], trunc: usize) -> C64 {
    let (q, t2, abcd) = f64_params(p);
    let one = C64::new(1.0, 0.0);
    let mut acc = one;
    for i in 0..p.n {
        for j in (i + 1)..p.n {
            for u in [x[i] * x[j], x[i] / x[j], x[j] / x[i], one / (x[i] * x[j])] {
                acc *= qpoch_c(u, q, trunc) / qpoch_c(t2 * u, q, trunc);
            }
        }
    }
    for i in 0..p.n {
        let xi2 = x[i] * x[i];
        acc *= qpoch_c(xi2, q, trunc) * qpoch_c(one / xi2, q, trunc);
        for e in abcd {
            acc /= qpoch_c(e * x[i], q, trunc) * qpoch_c(e / x[i], q, trunc);
        }
    }
    acc
}

/// The full density `Delta = C * Delta_+`, in a rearranged product form that
/// stays analytic on the torus: for each ordered pair `u` in
/// `{x_i x_j, x_i / x_j}` the factor is
/// `(u, q u^{-1}; q)_inf / (t^2 u, q t^2 u^{-1}; q)_inf`, and for each single
/// variable it is `(x_i^2, q x_i^{-2}; q)_inf` divided by
/// `(a x_i, b x_i, c x_i, d x_i, a x_i^{-1}, b x_i^{-1}, q c x_i^{-1},
/// q d x_i^{-1}; q)_inf`.
pub fn delta_full(p: &ParamSet, x: &[C64], trunc: usize) -> C64 {
    let (q, t2, abcd) = f64_params(p);
    let one = C64::new(1.0, 0.0);
    let [a, b, c, d] = abcd;
    let mut acc = one;
    for i in 0..p.n {
        for j in (i + 1)..p.n {
            for u in [x[i] * x[j], x[i] / x[j]] {
                acc *= qpoch_c(u, q, trunc) * qpoch_c(q / u, q, trunc)
                    / (qpoch_c(t2 * u, q, trunc) * qpoch_c(q * t2 / u, q, trunc));
            }
        }
    }
    for i in 0..p.n {
        let xi2 = x[i] * x[i];
        acc *= qpoch_c(xi2, q, trunc) * qpoch_c(q / xi2, q, trunc);
        acc /= qpoch_c(a * x[i], q, trunc)
            * qpoch_c(b * x[i], q, trunc)
            * qpoch_c(c * x[i], q, trunc)
            * qpoch_c(d * x[i], q, trunc)
            * qpoch_c(a / x[i], q, trunc)
            * qpoch_c(b / x[i], q, trunc)
            * qpoch_c(q * c / x[i], q, trunc)
            * qpoch_c(q * d / x[i], q, trunc);
    }
    acc
}

/// Tensor grid of `grid_n`-th roots of unity with precomputed density values.
pub struct TorusGrid {
    pub n: usize,
    pub grid_n: usize,
    roots: Vec<C64>,
    w_full: Vec<C64>,
    w_plus: Vec<C64>,
}

impl TorusGrid {
    pub fn new(p: &ParamSet, grid_n: usize, trunc: usize) -> Self {
        let n = p.n;
        let roots: Vec<C64> = (0..grid_n)
            .map(|k| {
                let th = 2.0 * std::f64::consts::PI * k as f64 / grid_n as f64;
                C64::new(th.cos(), th.sin())
            })
            .collect();
        let total = grid_n.pow(n as u32);
        let mut w_full = Vec::with_capacity(total);
        let mut w_plus = Vec::with_capacity(total);
        let mut x = vec![C64::new(1.0, 0.0); n];
        for flat in 0..total {
            Self::decode(grid_n, n, flat, &roots, &mut x);
            w_full.push(delta_full(p, &x, trunc));
            w_plus.push(delta_plus(p, &x, trunc));
        }
        TorusGrid {
            n,
            grid_n,
            roots,
            w_full,
            w_plus,
        }
    }

    fn decode(grid_n: usize, n: usize, mut flat: usize, roots: &[C64], x: &mut [C64]) {
        for i in 0..n {
            x[i] = roots[flat % grid_n];
            flat /= grid_n;
        }
    }

    fn mean(&self, f: impl Fn(&[C64], &[C64]) -> C64, weights: &[C64]) -> C64 {
        let mut x = vec![C64::new(1.0, 0.0); self.n];
        let mut acc = C64::new(0.0, 0.0);
        for (flat, w) in weights.iter().enumerate() {
            Self::decode(self.grid_n, self.n, flat, &self.roots, &mut x);
            let xinv: Vec<C64> = x.iter().map(|z| z.conj()).collect();
            acc += f(&x, &xinv) * w;
        }
        acc / weights.len() as f64
    }

    /// `<f, g> = mean of f(x) g(x^{-1}) Delta(x)` over the torus.
    pub fn pairing(&self, f: &Poly, g: &Poly) -> C64 {
        self.mean(|x, xinv| eval_poly(f, x) * eval_poly(g, xinv), &self.w_full)
    }

    /// `<f, g>_+`, the same mean against `Delta_+`.
    pub fn pairing_plus(&self, f: &Poly, g: &Poly) -> C64 {
        self.mean(|x, xinv| eval_poly(f, x) * eval_poly(g, xinv), &self.w_plus)
    }

    pub fn one_one(&self) -> C64 {
        self.mean(|_, _| C64::new(1.0, 0.0), &self.w_full)
    }

    pub fn one_one_plus(&self) -> C64 {
        self.mean(|_, _| C64::new(1.0, 0.0), &self.w_plus)
    }
}

// ---------------------------------------------------------------------------
// Residue weights.
// ---------------------------------------------------------------------------

/// Nested residue of `f` at the joint simple pole `x = centers`, by tensor
/// contour quadrature on small circles.
pub fn tensor_residue(
    f: impl Fn(&[C64]) -> C64,
    centers: &[C64],
    radii: &[f64],
    circle_n: usize,
) -> C64 {
    let n = centers.len();
    let nodes: Vec<C64> = (0..circle_n)
        .map(|k| {
            let th = 2.0 * std::f64::consts::PI * k as f64 / circle_n as f64;
            C64::new(th.cos(), th.sin())
        })
        .collect();
    let total = circle_n.pow(n as u32);
    let mut acc = C64::new(0.0, 0.0);
    let mut x = vec![C64::new(0.0, 0.0); n];
    for mut flat in 0..total {
        let mut jac = C64::new(1.0, 0.0);
        for i in 0..n {
            let dz = radii[i] * nodes[flat % circle_n];
            x[i] = centers[i] + dz;
            jac *= dz;
            flat /= circle_n;
        }
        acc += f(&x) * jac;
    }
    acc / total as f64
}

/// Candidate pole locations of the density (with parameters of `p`) in the
/// coordinate `skip`, the other coordinates sitting near `centers`.
fn pole_candidates(p: &ParamSet, centers: &[C64], skip: usize) -> Vec<C64> {
    let (q, t2, abcd) = f64_params(p);
    let mmax = 20i32;
    let mut out = vec![C64::new(0.0, 0.0)];
    for e in abcd {
        for m in 0..=mmax {
            out.push(C64::new(e * q.powi(m), 0.0));
            out.push(C64::new(1.0 / (e * q.powi(m)), 0.0));
        }
    }
    for (j, z) in centers.iter().enumerate() {
        if j == skip {
            continue;
        }
        for m in 0..=mmax {
            for w in [*z, C64::new(1.0, 0.0) / z] {
                out.push(w / (t2 * q.powi(m)));
                out.push(w * t2 * q.powi(m + 1));
            }
        }
    }
    out
}

fn residue_radii(p: &ParamSet, centers: &[C64], lam: &[i64]) -> Result<Vec<f64>> {
    let mut naive = Vec::with_capacity(centers.len());
    for (i, c) in centers.iter().enumerate() {
        let tol = 1e-9 * c.norm().max(1.0);
        let mut dist = f64::INFINITY;
        for cand in pole_candidates(p, centers, i) {
            let d = (c - cand).norm();
            if d > tol && d < dist {
                dist = d;
            }
        }
        if !dist.is_finite() || dist <= 0.0 {
            return Err(Error::Pole(format!(
                "cannot isolate the residue contour around {c:?}"
            )));
        }
        naive.push(0.5 * dist);
    }
    // Cross poles of the density travel with the other coordinates: a factor
    // vanishing on `x_i = t^{+-2} q^m x_j^{+-1}` passes exactly through linked
    // centers (equal consecutive parts, negative entries), and whether the
    // travelling pole ends up inside or outside the `x_i` circle is decided by
    // the *relative* radii `r/|center|`.  The spectral point is pinned slot by
    // slot along the dominant ordering, and a coordinate must capture the
    // poles travelling with coordinates pinned before it, so the relative
    // radii follow a strict geometric hierarchy ordered by the dominant slot
    // each coordinate carries (slot 1 last, hence widest).
    let base: f64 = 0.08;
    let w = crate::rootsys::w_lambda(lam);
    let mut rank = vec![0usize; centers.len()];
    for (slot, &coord) in w.perm.iter().enumerate() {
        rank[coord] = slot;
    }
    let rho0 = (0..centers.len())
        .map(|i| naive[i] / (centers[i].norm() * base.powi(rank[i] as i32)))
        .fold(f64::INFINITY, f64::min);
    Ok((0..centers.len())
        .map(|i| rho0 * base.powi(rank[i] as i32) * centers[i].norm())
        .collect())
}

/// Discrete symmetric weight `w~_+(gamma_mu^{-1})` for dominant `mu`: the
/// nested residue of `Delta_+(x; dual parameters) / (x_1 ... x_n)` at
/// `x = gamma_mu^{-1}`.
pub fn residue_weight_plus(
    p: &ParamSet,
    mu: &[i64],
    circle_n: usize,
    trunc: usize,
) -> Result<C64> {
    let pd = p.dual();
    let centers = point_c64(&invert_point(&gamma(p, mu)?));
    let radii = residue_radii(&pd, &centers, mu)?;
    Ok(tensor_residue(
        |x| {
            let vol: C64 = x.iter().product();
            delta_plus(&pd, x, trunc) / vol
        },
        &centers,
        &radii,
        circle_n,
    ))
}

/// Discrete full weight `w~(gamma_lam^{-1})` for arbitrary `lam`:
/// `(-1)^{n_lam}` times the nested residue of
/// `Delta(x; dual parameters) / (x_1 ... x_n)` at `x = gamma_lam^{-1}`.
pub fn residue_weight(p: &ParamSet, lam: &[i64], circle_n: usize, trunc: usize) -> Result<C64> {
    let pd = p.dual();
    let centers = point_c64(&invert_point(&gamma(p, lam)?));
    let radii = residue_radii(&pd, &centers, lam)?;
    let res = tensor_residue(
        |x| {
            let vol: C64 = x.iter().product();
            delta_full(&pd, x, trunc) / vol
        },
        &centers,
        &radii,
        circle_n,
    );
    Ok(if n_lambda(lam) % 2 == 1 { -res } else { res })
}

// ---------------------------------------------------------------------------
// The transform pair.
// ---------------------------------------------------------------------------

/// The transform coefficient `F(f)(gamma_lam^{-1}) = <f, E'(gamma_lam^{-1})>`,
/// where the primed family lives at inverse parameters.
pub fn transform_coeff(grid: &TorusGrid, p: &ParamSet, f: &Poly, lam: &[i64]) -> Result<C64> {
    let eprime = normalize_e(&p.inverse(), lam)?;
    Ok(grid.pairing(f, &eprime))
}

pub struct RoundtripReport {
    /// `k = <1,1> w~(gamma_0^{-1})`, measured from the quadrature data.
    pub k: C64,
    /// The same constant via `K K~ <1,1>_+ w~_+(gamma_0^{-1}) / |W|`.
    pub k_cross: C64,
    /// Largest coefficient error of `G(F(f)) - k f`, relative to `|k|`.
    pub max_err: f64,
}

/// Run the inversion `G(F(f)) = k f` for a polynomial supported on the given
/// weights (which must include every weight in the expansion of `f` over the
/// renormalized family).
pub fn transform_roundtrip(
    p: &ParamSet,
    grid: &TorusGrid,
    f: &Poly,
    support: &[Vec<i64>],
    circle_n: usize,
    trunc: usize,
) -> Result<RoundtripReport> {
    let mut acc: BTreeMap<Exponent, C64> = BTreeMap::new();
    for lam in support {
        let coeff = transform_coeff(grid, p, f, lam)? * residue_weight(p, lam, circle_n, trunc)?;
        for (e, c) in normalize_e(p, lam)?.iter() {
            *acc.entry(e.clone()).or_insert(C64::new(0.0, 0.0)) += coeff * c64(c);
        }
    }
    let zero = vec![0i64; p.n];
    let k = grid.one_one() * residue_weight(p, &zero, circle_n, trunc)?;
    let w_count = (2usize.pow(p.n as u32) * (1..=p.n).product::<usize>()) as f64;
    let k_cross = c64(&(&k_const(p)? * &k_const(&p.dual())?))
        * grid.one_one_plus()
        * residue_weight_plus(p, &zero, circle_n, trunc)?
        / w_count;
    let mut max_err: f64 = 0.0;
    for (e, c) in f.iter() {
        *acc.entry(e.clone()).or_insert(C64::new(0.0, 0.0)) -= k * c64(c);
    }
    for v in acc.values() {
        max_err = max_err.max(v.norm() / k.norm());
    }
    Ok(RoundtripReport { k, k_cross, max_err })
}

/// The symmetric norm ratio measured by quadrature, for comparison against
/// its closed product form.
pub fn measured_norm_ratio_sym(
    p: &ParamSet,
    grid: &TorusGrid,
    lam: &[i64],
) -> Result<(C64, Rat)> {
    let ep = crate::koornwinder::normalize_eplus(p, lam)?;
    let measured = grid.pairing_plus(&ep, &ep) / grid.one_one_plus();
    Ok((measured, norm_ratio_sym(p, lam)?))
}
