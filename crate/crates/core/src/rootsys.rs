//! Affine root system of type (C-check, C) in rank `n`, and the attached
//! (extended) Weyl group combinatorics.
//!
//! The ambient affine roots are `a + (k/2) delta` with `a` a vector in `Z^n`
//! and `k` an integer; `delta` is the null root.  The full system `S` consists
//! of `+-eps_i + (m/2) delta`, `+-2 eps_i + m delta`, and
//! `+-eps_i +- eps_j + m delta` (i < j); the inmultiplyable subsystem `R`
//! drops the short vectors `+-eps_i + ...`, and its gradient projection
//! `Sigma` is the finite root system of type `C_n`.
//!
//! Conventions fixed here (single source of truth):
//! - A signed permutation acts by `(w lam)_{perm(i)} = signs_i * lam_i`.
//! - A finite root is positive iff its first nonzero coordinate is positive;
//!   an affine root is positive iff its `delta`-offset is positive, or zero
//!   offset with positive gradient.
//! - `eps(0) = +1` in the spectral vectors `rho(lam)`; this matches the
//!   minimal-length coset representative route `rho(lam) = w_lam rho`.

use crate::scalar::Scalar;
use crate::{Error, Rat, Result};
use itertools::Itertools;

/// Affine root `grad + (half_delta / 2) * delta`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineRoot {
    pub grad: Vec<i64>,
    pub half_delta: i64,
}

/// The five Weyl orbits of the full affine root system `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orbit {
    /// Orbit of `a_0 = delta - 2 eps_1` (long gradient, odd delta multiple).
    A0,
    /// Orbit of `a_0_v` (short gradient, half-odd-integer delta multiple).
    A0v,
    /// Orbit of the middle-length simple roots `eps_i - eps_{i+1}`.
    Mid,
    /// Orbit of `a_n = 2 eps_n` (long gradient, even delta multiple).
    An,
    /// Orbit of `a_n_v = eps_n` (short gradient, integer delta multiple).
    Anv,
}

impl AffineRoot {
    pub fn new(grad: Vec<i64>, half_delta: i64) -> Self {
        AffineRoot { grad, half_delta }
    }

    pub fn rank(&self) -> usize {
        self.grad.len()
    }

    pub fn neg(&self) -> Self {
        AffineRoot::new(self.grad.iter().map(|x| -x).collect(), -self.half_delta)
    }

    /// Squared length of the gradient (1, 2 or 4 for roots of `S`).
    pub fn norm2(&self) -> i64 {
        self.grad.iter().map(|x| x * x).sum()
    }

    /// `<lam, grad>` for a weight `lam`.
    pub fn pair_weight(&self, lam: &[i64]) -> i64 {
        lam.iter().zip(&self.grad).map(|(a, b)| a * b).sum()
    }

    /// `<lam, beta_v> = 2 <lam, grad> / <grad, grad>` (delta is radical).
    pub fn pair_coroot(&self, lam: &[i64]) -> i64 {
        let num = 2 * self.pair_weight(lam);
        let norm = self.norm2();
        debug_assert!(norm > 0 && num % norm == 0, "non-integral coroot pairing");
        num / norm
    }

    /// `beta / 2` when that is again an affine root of `S`.
    pub fn half(&self) -> Option<AffineRoot> {
        if self.half_delta % 2 != 0 || self.grad.iter().any(|x| x % 2 != 0) {
            return None;
        }
        let half = AffineRoot::new(self.grad.iter().map(|x| x / 2).collect(), self.half_delta / 2);
        half.orbit().ok().map(|_| half)
    }

    /// Number of nonzero gradient entries and their pattern, used to classify.
    fn grad_kind(&self) -> Option<i64> {
        // Returns norm2 if the gradient looks like a C_n-system vector.
        let nz: Vec<i64> = self.grad.iter().copied().filter(|&x| x != 0).collect();
        match nz.as_slice() {
            [a] if a.abs() == 1 => Some(1),
            [a] if a.abs() == 2 => Some(4),
            [a, b] if a.abs() == 1 && b.abs() == 1 => Some(2),
            _ => None,
        }
    }

    /// Which of the five Weyl orbits of `S` this root belongs to.
    pub fn orbit(&self) -> Result<Orbit> {
        match self.grad_kind() {
            Some(1) => {
                if self.half_delta.rem_euclid(2) == 1 {
                    Ok(Orbit::A0v)
                } else {
                    Ok(Orbit::Anv)
                }
            }
            Some(4) => {
                if self.half_delta % 2 != 0 {
                    Err(Error::NotARoot(format!("{self:?}")))
                } else if (self.half_delta / 2).rem_euclid(2) == 1 {
                    Ok(Orbit::A0)
                } else {
                    Ok(Orbit::An)
                }
            }
            Some(2) => {
                if self.half_delta % 2 != 0 {
                    Err(Error::NotARoot(format!("{self:?}")))
                } else {
                    Ok(Orbit::Mid)
                }
            }
            _ => Err(Error::NotARoot(format!("{self:?}"))),
        }
    }

    /// Membership in the inmultiplyable subsystem `R` (type C_n-tilde).
    pub fn is_in_r(&self) -> bool {
        matches!(self.grad_kind(), Some(2) | Some(4)) && self.half_delta % 2 == 0
    }

    /// Positivity: positive delta-offset, or zero offset and positive gradient.
    pub fn is_positive(&self) -> bool {
        if self.half_delta != 0 {
            return self.half_delta > 0;
        }
        finite_positive(&self.grad)
    }
}

/// Positivity of a finite root: first nonzero coordinate positive.
pub fn finite_positive(grad: &[i64]) -> bool {
    grad.iter().find(|&&x| x != 0).map(|&x| x > 0).unwrap_or(false)
}

/// The simple affine roots `a_0, ..., a_n`.
pub fn simple_root(n: usize, i: usize) -> AffineRoot {
    assert!(i <= n);
    if i == 0 {
        let mut g = vec![0; n];
        g[0] = -2;
        AffineRoot::new(g, 2)
    } else if i < n {
        let mut g = vec![0; n];
        g[i - 1] = 1;
        g[i] = -1;
        AffineRoot::new(g, 0)
    } else {
        let mut g = vec![0; n];
        g[n - 1] = 2;
        AffineRoot::new(g, 0)
    }
}

/// Positive middle-length finite roots `eps_i +- eps_j`, `i < j`.
pub fn sigma_mid_plus(n: usize) -> Vec<AffineRoot> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut g = vec![0; n];
            g[i] = 1;
            g[j] = -1;
            out.push(AffineRoot::new(g, 0));
            let mut g = vec![0; n];
            g[i] = 1;
            g[j] = 1;
            out.push(AffineRoot::new(g, 0));
        }
    }
    out
}

/// Positive long finite roots `2 eps_i`.
pub fn sigma_long_plus(n: usize) -> Vec<AffineRoot> {
    (0..n)
        .map(|i| {
            let mut g = vec![0; n];
            g[i] = 2;
            AffineRoot::new(g, 0)
        })
        .collect()
}

/// All positive finite roots of `Sigma` (type C_n).
pub fn sigma_plus(n: usize) -> Vec<AffineRoot> {
    let mut out = sigma_mid_plus(n);
    out.extend(sigma_long_plus(n));
    out
}

// ---------------------------------------------------------------------------
// Finite Weyl group: signed permutations.
// ---------------------------------------------------------------------------

/// Signed permutation `w` with action `(w lam)_{perm(i)} = signs_i * lam_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    pub perm: Vec<usize>,
    pub signs: Vec<i64>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            perm: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p == i) && self.signs.iter().all(|&s| s == 1)
    }

    /// `- identity`, the longest element of W.
    pub fn longest(n: usize) -> Self {
        SignedPermutation {
            perm: (0..n).collect(),
            signs: vec![-1; n],
        }
    }

    /// Finite simple reflections: `s_i` swaps coordinates i-1, i for
    /// `1 <= i < n`; `s_n` flips the sign of the last coordinate.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i));
        let mut w = Self::identity(n);
        if i < n {
            w.perm.swap(i - 1, i);
        } else {
            w.signs[n - 1] = -1;
        }
        w
    }

    pub fn apply_weight(&self, lam: &[i64]) -> Vec<i64> {
        let mut out = vec![0; lam.len()];
        for i in 0..lam.len() {
            out[self.perm[i]] = self.signs[i] * lam[i];
        }
        out
    }

    /// Action on a point with coordinates in any field scalar.
    pub fn apply_point<S: Scalar>(&self, x: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); x.len()];
        for i in 0..x.len() {
            out[self.perm[i]] = if self.signs[i] == 1 {
                x[i].clone()
            } else {
                x[i].inv()
            };
        }
        out
    }

    pub fn apply_root(&self, beta: &AffineRoot) -> AffineRoot {
        AffineRoot::new(self.apply_weight(&beta.grad), beta.half_delta)
    }

    /// `self` after `other`: `(self . other)(lam) = self(other(lam))`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut signs = vec![0; n];
        for i in 0..n {
            perm[i] = self.perm[other.perm[i]];
            signs[i] = other.signs[i] * self.signs[other.perm[i]];
        }
        SignedPermutation { perm, signs }
    }

    pub fn inverse(&self) -> Self {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut signs = vec![0; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        SignedPermutation { perm, signs }
    }

    /// Coxeter length = number of positive finite roots sent to negative ones.
    pub fn length(&self) -> usize {
        sigma_plus(self.rank())
            .iter()
            .filter(|a| !finite_positive(&self.apply_weight(&a.grad)))
            .count()
    }

    /// All `2^n n!` elements.
    pub fn enumerate(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for perm in (0..n).permutations(n) {
            for mask in 0..(1u32 << n) {
                let signs: Vec<i64> = (0..n)
                    .map(|i| if mask & (1 << i) != 0 { -1 } else { 1 })
                    .collect();
                out.push(SignedPermutation {
                    perm: perm.clone(),
                    signs,
                });
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Affine Weyl group elements tau(trans) . w.
// ---------------------------------------------------------------------------

/// Element `tau(trans) * fin` of the affine Weyl group `W x tau(Z^n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineWeylElement {
    pub trans: Vec<i64>,
    pub fin: SignedPermutation,
}

impl AffineWeylElement {
    pub fn identity(n: usize) -> Self {
        AffineWeylElement {
            trans: vec![0; n],
            fin: SignedPermutation::identity(n),
        }
    }

    pub fn rank(&self) -> usize {
        self.trans.len()
    }

    pub fn from_translation(lam: &[i64]) -> Self {
        AffineWeylElement {
            trans: lam.to_vec(),
            fin: SignedPermutation::identity(lam.len()),
        }
    }

    pub fn from_finite(w: SignedPermutation) -> Self {
        let n = w.rank();
        AffineWeylElement {
            trans: vec![0; n],
            fin: w,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.trans.iter().all(|&x| x == 0) && self.fin.is_identity()
    }

    /// Simple reflections `s_0, ..., s_n`; `s_0 = tau(-eps_1) * (eps_1 -> -eps_1)`.
    pub fn simple(n: usize, i: usize) -> Self {
        if i == 0 {
            let mut trans = vec![0; n];
            trans[0] = -1;
            let mut fin = SignedPermutation::identity(n);
            fin.signs[0] = -1;
            AffineWeylElement { trans, fin }
        } else {
            Self::from_finite(SignedPermutation::simple(n, i))
        }
    }

    /// `(self . other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        // tau(a) u . tau(b) v = tau(a + u b) (u v)
        let ub = self.fin.apply_weight(&other.trans);
        AffineWeylElement {
            trans: self
                .trans
                .iter()
                .zip(&ub)
                .map(|(x, y)| x + y)
                .collect(),
            fin: self.fin.compose(&other.fin),
        }
    }

    pub fn inverse(&self) -> Self {
        let wi = self.fin.inverse();
        let t = wi.apply_weight(&self.trans);
        AffineWeylElement {
            trans: t.iter().map(|x| -x).collect(),
            fin: wi,
        }
    }

    /// Canonical (level-zero) action on affine roots:
    /// `tau(lam) beta = beta + <lam, grad(beta)> delta`.
    pub fn apply_root(&self, beta: &AffineRoot) -> AffineRoot {
        let mut g = self.fin.apply_root(beta);
        let shift: i64 = self.trans.iter().zip(&g.grad).map(|(a, b)| a * b).sum();
        g.half_delta += 2 * shift;
        g
    }

    /// Dot action on weights: `tau(lam).x = x + lam`, finite part linear.
    pub fn dot(&self, x: &[i64]) -> Vec<i64> {
        self.fin
            .apply_weight(x)
            .iter()
            .zip(&self.trans)
            .map(|(a, b)| a + b)
            .collect()
    }

    /// Length of `tau(lam) w`: sum over positive finite roots `alpha` of
    /// `| -<lam, w alpha> + chi(w alpha) |` with `chi = 1` on negative roots.
    pub fn length(&self) -> i64 {
        let n = self.rank();
        sigma_plus(n)
            .iter()
            .map(|a| {
                let wa = self.fin.apply_weight(&a.grad);
                let pair: i64 = self.trans.iter().zip(&wa).map(|(x, y)| x * y).sum();
                let chi = if finite_positive(&wa) { 0 } else { 1 };
                (-pair + chi).abs()
            })
            .sum()
    }

    /// A reduced word by greedy left descents (lowest index first).
    pub fn reduced_word(&self) -> Result<Vec<usize>> {
        let n = self.rank();
        let mut u = self.clone();
        let mut word = Vec::new();
        while !u.is_identity() {
            let l = u.length();
            let mut found = false;
            for i in 0..=n {
                let su = AffineWeylElement::simple(n, i).compose(&u);
                if su.length() < l {
                    word.push(i);
                    u = su;
                    found = true;
                    break;
                }
            }
            if !found {
                return Err(Error::Internal(
                    "no descent found for a non-identity affine Weyl element".into(),
                ));
            }
        }
        Ok(word)
    }

    /// Inversion set `{beta in R+ : u(beta) in R-}` (finite by construction).
    pub fn inversion_set(&self) -> Vec<AffineRoot> {
        let n = self.rank();
        let mut sigma_all = sigma_plus(n);
        let negs: Vec<AffineRoot> = sigma_all.iter().map(AffineRoot::neg).collect();
        sigma_all.extend(negs);
        let bound: i64 = self
            .trans
            .iter()
            .map(|x| x.abs())
            .sum::<i64>()
            .max(1)
            * 2
            + 2;
        let mut out = Vec::new();
        for a in &sigma_all {
            for m in 0..=bound {
                let beta = AffineRoot::new(a.grad.clone(), 2 * m);
                if !beta.is_positive() {
                    continue;
                }
                if self.apply_root(&beta).is_positive() {
                    continue;
                }
                out.push(beta);
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Multiplicity data.
// ---------------------------------------------------------------------------

/// The five W-invariant Hecke parameters, indexed by orbit.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplicityData {
    pub t0: Rat,
    pub t0v: Rat,
    pub t: Rat,
    pub tn: Rat,
    pub tnv: Rat,
}

impl MultiplicityData {
    pub fn value(&self, o: Orbit) -> Rat {
        match o {
            Orbit::A0 => self.t0.clone(),
            Orbit::A0v => self.t0v.clone(),
            Orbit::Mid => self.t.clone(),
            Orbit::An => self.tn.clone(),
            Orbit::Anv => self.tnv.clone(),
        }
    }

    /// Parameter of an affine root, via its orbit.
    pub fn of_root(&self, beta: &AffineRoot) -> Result<Rat> {
        Ok(self.value(beta.orbit()?))
    }

    /// Parameter of `beta/2` when `beta/2` is a root, else 1.
    pub fn of_half_root(&self, beta: &AffineRoot) -> Result<Rat> {
        match beta.half() {
            Some(h) => self.of_root(&h),
            None => Ok(Rat::from_integer(1.into())),
        }
    }

    /// Duality swap: `t0 <-> tnv`, everything else fixed.
    pub fn dual(&self) -> Self {
        MultiplicityData {
            t0: self.tnv.clone(),
            t0v: self.t0v.clone(),
            t: self.t.clone(),
            tn: self.tn.clone(),
            tnv: self.t0.clone(),
        }
    }

    /// Invert every parameter.
    pub fn inverse(&self) -> Self {
        MultiplicityData {
            t0: self.t0.recip(),
            t0v: self.t0v.recip(),
            t: self.t.recip(),
            tn: self.tn.recip(),
            tnv: self.tnv.recip(),
        }
    }

    /// The q-shift `t -> q t`: orbit-wise factors `(1, q^{1/2}, q, 1, 1)` on
    /// `(a_0, mid, a_n, a_0_v, a_n_v)`.
    pub fn qshift(&self, qh: &Rat) -> Self {
        MultiplicityData {
            t0: self.t0.clone(),
            t0v: self.t0v.clone(),
            t: &self.t * qh,
            tn: &self.tn * qh * qh,
            tnv: self.tnv.clone(),
        }
    }

    pub fn all_nonzero(&self) -> bool {
        use num_traits::Zero;
        ![&self.t0, &self.t0v, &self.t, &self.tn, &self.tnv]
            .iter()
            .any(|r| r.is_zero())
    }
}

/// Product of simple-root parameters along a reduced word of `u`.
pub fn t_w(u: &AffineWeylElement, mult: &MultiplicityData) -> Result<Rat> {
    let n = u.rank();
    let mut acc = Rat::from_integer(1.into());
    for i in u.reduced_word()? {
        acc *= mult.of_root(&simple_root(n, i))?;
    }
    Ok(acc)
}

pub fn t_w_finite(w: &SignedPermutation, mult: &MultiplicityData) -> Result<Rat> {
    t_w(&AffineWeylElement::from_finite(w.clone()), mult)
}

// ---------------------------------------------------------------------------
// Spectral vectors, orders, downsets.
// ---------------------------------------------------------------------------

fn eps_sign(k: i64) -> i64 {
    if k >= 0 {
        1
    } else {
        -1
    }
}

/// `rho_l(lam) = sum over positive long roots of eps(<lam, alpha>) alpha_v`.
pub fn rho_l(lam: &[i64]) -> Vec<i64> {
    let n = lam.len();
    let mut out = vec![0; n];
    for a in sigma_long_plus(n) {
        let s = eps_sign(a.pair_weight(lam));
        // alpha_v for 2 eps_i is eps_i.
        for (o, g) in out.iter_mut().zip(&a.grad) {
            *o += s * g / 2;
        }
    }
    out
}

/// `rho_m(lam) = sum over positive middle roots of eps(<lam, alpha>) alpha_v`.
pub fn rho_m(lam: &[i64]) -> Vec<i64> {
    let n = lam.len();
    let mut out = vec![0; n];
    for a in sigma_mid_plus(n) {
        let s = eps_sign(a.pair_weight(lam));
        // alpha_v = alpha for middle-length roots.
        for (o, g) in out.iter_mut().zip(&a.grad) {
            *o += s * g;
        }
    }
    out
}

/// Decreasing reordering of absolute values: the dominant representative.
pub fn lambda_plus(lam: &[i64]) -> Vec<i64> {
    let mut v: Vec<i64> = lam.iter().map(|x| x.abs()).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

pub fn is_dominant(lam: &[i64]) -> bool {
    lam.windows(2).all(|w| w[0] >= w[1]) && lam.last().map(|&x| x >= 0).unwrap_or(true)
}

pub fn is_strictly_dominant(lam: &[i64]) -> bool {
    lam.windows(2).all(|w| w[0] > w[1]) && lam.last().map(|&x| x > 0).unwrap_or(true)
}

/// Minimal-length `w` in W with `w(lambda_plus) = lam`.
pub fn w_lambda(lam: &[i64]) -> SignedPermutation {
    let n = lam.len();
    let lp = lambda_plus(lam);
    let mut best: Option<(usize, SignedPermutation)> = None;
    for w in SignedPermutation::enumerate(n) {
        if w.apply_weight(&lp) == lam {
            let l = w.length();
            match &best {
                Some((bl, _)) if *bl <= l => {}
                _ => best = Some((l, w)),
            }
        }
    }
    best.expect("orbit representative always exists").1
}

/// Number of strictly negative entries.
pub fn n_lambda(lam: &[i64]) -> usize {
    lam.iter().filter(|&&x| x < 0).count()
}

/// Spectral vectors with the minimal-coset-representative cross-check.
pub fn rho_pair(lam: &[i64]) -> Result<(Vec<i64>, Vec<i64>)> {
    let rl = rho_l(lam);
    let rm = rho_m(lam);
    let w = w_lambda(lam);
    let lp = lambda_plus(lam);
    if rl != w.apply_weight(&rho_l(&lp)) || rm != w.apply_weight(&rho_m(&lp)) {
        return Err(Error::Internal(format!(
            "spectral vector mismatch between sign-sum and coset routes at {lam:?}"
        )));
    }
    Ok((rl, rm))
}

/// Membership in the nonnegative coroot cone: all prefix sums nonnegative.
pub fn in_pos_coroot_cone(v: &[i64]) -> bool {
    let mut acc = 0;
    for x in v {
        acc += x;
        if acc < 0 {
            return false;
        }
    }
    true
}

/// Dominance order: `mu <= lam` iff `lam - mu` lies in the coroot cone.
pub fn le_dominance(mu: &[i64], lam: &[i64]) -> bool {
    let d: Vec<i64> = lam.iter().zip(mu).map(|(a, b)| a - b).collect();
    in_pos_coroot_cone(&d)
}

/// The solver order: `mu` precedes `lam` iff `mu+ < lam+` strictly, or the
/// dominant representatives agree and `mu <= lam`.
pub fn preceq(mu: &[i64], lam: &[i64]) -> bool {
    let mp = lambda_plus(mu);
    let lp = lambda_plus(lam);
    if mp == lp {
        le_dominance(mu, lam)
    } else {
        le_dominance(&mp, &lp)
    }
}

fn prefix_sums(v: &[i64]) -> Vec<i64> {
    let mut acc = 0;
    v.iter()
        .map(|x| {
            acc += x;
            acc
        })
        .collect()
}

/// Sort key realizing a linear extension of the solver order.
fn order_key(mu: &[i64]) -> (Vec<i64>, Vec<i64>) {
    (prefix_sums(&lambda_plus(mu)), prefix_sums(mu))
}

/// All weights preceding `lam`, sorted by a linear extension of the order
/// (so `lam` itself comes last).
pub fn downset(lam: &[i64]) -> Vec<Vec<i64>> {
    let n = lam.len();
    let bound = lambda_plus(lam).first().copied().unwrap_or(0);
    let mut out: Vec<Vec<i64>> = (0..n)
        .map(|_| -bound..=bound)
        .multi_cartesian_product()
        .filter(|mu| preceq(mu, lam))
        .collect();
    out.sort_by_key(|mu| order_key(mu));
    debug_assert_eq!(out.last().map(Vec::as_slice), Some(lam));
    out
}

/// Dominant weights `mu <= lam` (dominance order), sorted ascending.
pub fn dominant_downset(lam: &[i64]) -> Result<Vec<Vec<i64>>> {
    if !is_dominant(lam) {
        return Err(Error::NotDominant(lam.to_vec()));
    }
    let mut out: Vec<Vec<i64>> = downset(lam)
        .into_iter()
        .filter(|mu| is_dominant(mu))
        .collect();
    out.sort_by_key(|mu| order_key(mu));
    Ok(out)
}

/// The W-orbit of a weight, deduplicated.
pub fn weyl_orbit(lam: &[i64]) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = SignedPermutation::enumerate(lam.len())
        .iter()
        .map(|w| w.apply_weight(lam))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Finite inversion set `Sigma+ inter w^{-1} Sigma-`.
pub fn inversion_set_finite(w: &SignedPermutation) -> Vec<AffineRoot> {
    sigma_plus(w.rank())
        .into_iter()
        .filter(|a| !finite_positive(&w.apply_weight(&a.grad)))
        .collect()
}

/// `R+ inter tau(lam) R-` for dominant `lam`: the roots `alpha + m delta`
/// with `alpha + (m - <lam, alpha>) delta` negative, which comes down to
/// `alpha` finite positive and `0 <= m < <lam, alpha>`.
pub fn inversion_set_translation(lam: &[i64]) -> Result<Vec<AffineRoot>> {
    if !is_dominant(lam) {
        return Err(Error::NotDominant(lam.to_vec()));
    }
    let neg: Vec<i64> = lam.iter().map(|x| -x).collect();
    Ok(AffineWeylElement::from_translation(&neg).inversion_set())
}
