//! End-to-end acceptance gate: one criterion per block, one printed pass/fail
//! line each, exercising the full stack from the exact algebra through the
//! quadrature measurements.  Run with `--nocapture` to see the report lines.

use num_traits::One;
use rand::{Rng, SeedableRng};
use std::time::Instant;

use koornwinder::closedforms::{
    c_eval, eval_ns, eval_sym, eval_sym_product, gustafson_ct, k_const, norm_ratio_ns,
    norm_ratio_sym, norm_relation_product,
};
use koornwinder::exactring::Exponent;
use koornwinder::heckeops::{
    apply_c, apply_ti, apply_ti_inv, apply_y, check_relations, is_w_invariant, ParamSet,
};
use koornwinder::koornwinder::{
    check_antisym_shift, check_c_expansion, check_si_action, check_ti_action, compute_antisym,
    compute_ns, compute_sym, gamma, invert_point, kappa, normalize_e, x_base,
    x_point,
};
use koornwinder::rootsys::{
    downset, is_dominant, is_strictly_dominant, lambda_plus, preceq, t_w_finite, weyl_orbit,
    MultiplicityData, SignedPermutation,
};
use koornwinder::scalar::{rat_to_f64, ratio};
use koornwinder::torusquad::{
    residue_weight, residue_weight_plus, transform_coeff, transform_roundtrip, TorusGrid,
};
use koornwinder::{Poly, Rat};

const TRUNC: usize = 40;

fn params(n: usize) -> ParamSet {
    ParamSet::new(
        n,
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

fn params_second() -> ParamSet {
    ParamSet::new(
        2,
        ratio(1, 3),
        MultiplicityData {
            t0: ratio(2, 5),
            t0v: ratio(3, 5),
            t: ratio(1, 2),
            tn: ratio(3, 7),
            tnv: ratio(5, 7),
        },
    )
    .unwrap()
}

fn params_third() -> ParamSet {
    ParamSet::new(
        2,
        ratio(2, 3),
        MultiplicityData {
            t0: ratio(1, 2),
            t0v: ratio(3, 4),
            t: ratio(3, 5),
            tn: ratio(2, 5),
            tnv: ratio(5, 6),
        },
    )
    .unwrap()
}

/// All weights whose dominant representative has component sum at most `k`.
fn weight_box(n: usize, k: i64) -> Vec<Vec<i64>> {
    let mut dominants = Vec::new();
    fn rec(n: usize, left: i64, floor: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let hi = left.min(floor);
        for v in (0..=hi).rev() {
            cur.push(v);
            rec(n, left - v, v, cur, out);
            cur.pop();
        }
    }
    rec(n, k, k, &mut Vec::new(), &mut dominants);
    let mut out = Vec::new();
    for d in dominants {
        out.extend(weyl_orbit(&d));
    }
    out.sort();
    out.dedup();
    out
}

struct Report {
    lines: Vec<(String, bool, f64)>,
}

impl Report {
    fn run(&mut self, name: &str, body: impl FnOnce() -> Result<(), String>) {
        let start = Instant::now();
        let result = body();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => {
                println!("PASS  {name}  ({secs:.1}s)");
                self.lines.push((name.to_string(), true, secs));
            }
            Err(why) => {
                println!("FAIL  {name}  ({secs:.1}s): {why}");
                self.lines.push((name.to_string(), false, secs));
            }
        }
    }
}

fn err(cond: bool, msg: impl Fn() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

#[test]
fn acceptance() {
    let mut rep = Report { lines: Vec::new() };
    let p = params(2);
    let the_box = weight_box(2, 3);

    rep.run(
        "criterion 1: exact algebra relations on random polynomials",
        || {
            let mut rng = rand::rngs::StdRng::seed_from_u64(11);
            for ps in [&p, &params_second(), &params_third()] {
                for trial in 0..20 {
                    let mut f = Poly::zero(2);
                    for _ in 0..5 {
                        f.add_term(
                            Exponent(vec![rng.gen_range(-3..=3), rng.gen_range(-3..=3)]),
                            ratio(rng.gen_range(-9..=9), rng.gen_range(1..=9)),
                        );
                    }
                    let failures = check_relations(ps, &f).map_err(|e| e.to_string())?;
                    err(failures.is_empty(), || {
                        format!("trial {trial}: {failures:?}")
                    })?;
                }
            }
            Ok(())
        },
    );

    rep.run(
        "criterion 2: joint eigenpolynomials across the degree box",
        || {
            for lam in &the_box {
                let f = compute_ns(&p, lam).map_err(|e| e.to_string())?;
                err(f.coeff(&Exponent(lam.clone())).is_one(), || {
                    format!("{lam:?} is not monic")
                })?;
                for e in f.support() {
                    err(preceq(&e.0, lam), || {
                        format!("{lam:?}: support {e:?} escapes the downset")
                    })?;
                }
                let gam = gamma(&p, lam).map_err(|e| e.to_string())?;
                for i in 1..=2 {
                    let g = apply_y(&p, i, &f).map_err(|e| e.to_string())?;
                    err(g == f.scale(&gam[i - 1]), || {
                        format!("{lam:?}: Y_{i} eigenvalue is off")
                    })?;
                }
            }
            Ok(())
        },
    );

    rep.run(
        "criterion 3: operator actions and symmetrizer expansions",
        || {
            for lam in &the_box {
                for i in 1..=2 {
                    check_ti_action(&p, lam, i).map_err(|e| e.to_string())?;
                    check_si_action(&p, lam, i).map_err(|e| e.to_string())?;
                }
                if is_dominant(lam) {
                    check_c_expansion(&p, lam, true).map_err(|e| e.to_string())?;
                }
                if is_strictly_dominant(lam) {
                    check_c_expansion(&p, lam, false).map_err(|e| e.to_string())?;
                }
            }
            // Idempotency and the sign characters of the symmetrizers.
            let mut f = Poly::zero(2);
            f.add_term(Exponent(vec![2, -1]), Rat::one());
            f.add_term(Exponent(vec![0, 1]), ratio(3, 4));
            for plus in [true, false] {
                let g = apply_c(&p, plus, &f).map_err(|e| e.to_string())?;
                let gg = apply_c(&p, plus, &g).map_err(|e| e.to_string())?;
                err(gg == g, || format!("C_{plus} is not idempotent"))?;
                if plus {
                    err(is_w_invariant(&g), || "C_+ image is not invariant".into())?;
                }
                for i in 1..=2 {
                    let ti = p.t_simple(i);
                    let want = if plus { ti } else { -p.t_simple(i).recip() };
                    let h = apply_ti(&p, i, &g).map_err(|e| e.to_string())?;
                    err(h == g.scale(&want), || {
                        format!("T_{i} C_{plus} has the wrong character")
                    })?;
                }
            }
            Ok(())
        },
    );

    rep.run("criterion 4: duality across the degree box", || {
        let pd = p.dual();
        let e: Vec<Poly> = the_box
            .iter()
            .map(|l| normalize_e(&p, l))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let ed: Vec<Poly> = the_box
            .iter()
            .map(|l| normalize_e(&pd, l))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        for (li, lam) in the_box.iter().enumerate() {
            let gam_inv = invert_point(&gamma(&p, lam).map_err(|e| e.to_string())?);
            for (mi, mu) in the_box.iter().enumerate() {
                let x_inv = invert_point(&x_point(&p, mu).map_err(|e| e.to_string())?);
                err(e[li].eval(&x_inv) == ed[mi].eval(&gam_inv), || {
                    format!("duality fails at {lam:?}, {mu:?}")
                })?;
            }
        }
        Ok(())
    });

    rep.run("criterion 5: exact evaluation formulas", || {
        let x0 = x_base(&p).map_err(|e| e.to_string())?;
        let x0_inv = invert_point(&x0);
        for lam in &the_box {
            let formula = eval_ns(&p, lam).map_err(|e| e.to_string())?;
            let solver = compute_ns(&p, lam).map_err(|e| e.to_string())?.eval(&x0_inv);
            err(formula == solver, || {
                format!("non-symmetric evaluation fails at {lam:?}")
            })?;
            if is_dominant(lam) {
                let route_a = eval_sym(&p, lam).map_err(|e| e.to_string())?;
                let route_b = eval_sym_product(&p, lam).map_err(|e| e.to_string())?;
                let solver = compute_sym(&p, lam).map_err(|e| e.to_string())?.eval(&x0);
                err(route_a == solver && route_b == solver, || {
                    format!("symmetric evaluation fails at {lam:?}")
                })?;
            }
        }
        Ok(())
    });

    rep.run(
        "criterion 6: shift relation and the quadratic norm relations",
        || {
            for lam in [vec![0, 0], vec![1, 0], vec![1, 1], vec![2, 0]] {
                check_antisym_shift(&p, &lam).map_err(|e| e.to_string())?;
            }
            let grid = TorusGrid::new(&p, 64, TRUNC);
            let pq = p.qshifted();
            let grid_q = TorusGrid::new(&pq, 64, TRUNC);
            let pinv = p.inverse();
            let t_sigma = rat_to_f64(
                &t_w_finite(&SignedPermutation::longest(2), &p.mult).map_err(|e| e.to_string())?,
            );
            for lam in [vec![2i64, 1], vec![3, 1]] {
                let product =
                    rat_to_f64(&norm_relation_product(&p, &lam).map_err(|e| e.to_string())?);
                let pp = compute_sym(&p, &lam).map_err(|e| e.to_string())?;
                let pm = compute_antisym(&p, &lam).map_err(|e| e.to_string())?;
                let pm_inv = compute_antisym(&pinv, &lam).map_err(|e| e.to_string())?;
                let full = (grid.pairing(&pp, &pp) / grid.pairing(&pm, &pm_inv)).re;
                err((full - product).abs() <= 1e-6 * product.abs(), || {
                    format!("full-measure norm relation fails at {lam:?}: {full} vs {product}")
                })?;
                let mu: Vec<i64> = lam.iter().zip(kappa(2)).map(|(a, b)| a - b).collect();
                let den_poly = compute_sym(&pq, &mu).map_err(|e| e.to_string())?;
                let shifted = t_sigma * t_sigma * grid.pairing_plus(&pp, &pp).re
                    / grid_q.pairing_plus(&den_poly, &den_poly).re;
                err((shifted - product).abs() <= 1e-6 * product.abs(), || {
                    format!("q-shift norm relation fails at {lam:?}: {shifted} vs {product}")
                })?;
            }
            Ok(())
        },
    );

    rep.run(
        "criterion 7: quadrature orthogonality, norms, constant term, adjointness",
        || {
            let grid = TorusGrid::new(&p, 64, TRUNC);
            let pinv = p.inverse();
            let small: Vec<Vec<i64>> = weight_box(2, 2);
            let e: Vec<Poly> = small
                .iter()
                .map(|l| normalize_e(&p, l))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            let eprime: Vec<Poly> = small
                .iter()
                .map(|l| normalize_e(&pinv, l))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            let one_one = grid.one_one();
            for (li, lam) in small.iter().enumerate() {
                for (mi, mu) in small.iter().enumerate() {
                    let val = grid.pairing(&e[li], &eprime[mi]);
                    if li == mi {
                        let want = rat_to_f64(&norm_ratio_ns(&p, lam).map_err(|e| e.to_string())?);
                        let got = (val / one_one).re;
                        err((got - want).abs() <= 1e-6 * want.abs(), || {
                            format!("diagonal norm fails at {lam:?}: {got} vs {want}")
                        })?;
                    } else {
                        err(val.norm() <= 1e-8 * one_one.norm(), || {
                            format!("off-diagonal at {lam:?}, {mu:?}: {val}")
                        })?;
                    }
                }
            }
            let w = 8.0;
            let ct = grid.one_one_plus().re / w;
            let product = gustafson_ct(&p, TRUNC);
            err((ct - product).abs() <= 1e-8 * product.abs(), || {
                format!("constant term: {ct} vs {product}")
            })?;
            let kq = (grid.one_one() / grid.one_one_plus()).re * w;
            let kc = rat_to_f64(&k_const(&p).map_err(|e| e.to_string())?);
            err((kq - kc).abs() <= 1e-10 * kc.abs(), || {
                format!("symmetrization constant: {kq} vs {kc}")
            })?;
            let mut f = Poly::zero(2);
            f.add_term(Exponent(vec![1, 0]), Rat::one());
            f.add_term(Exponent(vec![-1, -1]), ratio(2, 3));
            let mut g = Poly::zero(2);
            g.add_term(Exponent(vec![0, 1]), ratio(-1, 2));
            g.add_term(Exponent(vec![1, 1]), Rat::one());
            for i in 0..=2 {
                let lhs = grid.pairing(&apply_ti(&p, i, &f).map_err(|e| e.to_string())?, &g);
                let rhs = grid.pairing(&f, &apply_ti_inv(&pinv, i, &g).map_err(|e| e.to_string())?);
                err((lhs - rhs).norm() <= 1e-8 * one_one.norm(), || {
                    format!("adjointness of T_{i}: {lhs} vs {rhs}")
                })?;
            }
            Ok(())
        },
    );

    rep.run("criterion 8: residue weights of the discrete measure", || {
        let w0 = residue_weight_plus(&p, &[0, 0], 48, TRUNC).map_err(|e| e.to_string())?;
        for lam in [vec![1i64, 0], vec![1, 1]] {
            let wl = residue_weight_plus(&p, &lam, 48, TRUNC).map_err(|e| e.to_string())?;
            let want = rat_to_f64(&norm_ratio_sym(&p, &lam).map_err(|e| e.to_string())?);
            let got = (w0 / wl).re;
            err((got - want).abs() <= 1e-6 * want.abs(), || {
                format!("symmetric residue ratio at {lam:?}: {got} vs {want}")
            })?;
        }
        for lam in [vec![0i64, 0], vec![1, 0], vec![0, 1], vec![1, 1]] {
            let full = residue_weight(&p, &lam, 48, TRUNC).map_err(|e| e.to_string())?;
            let plus = residue_weight_plus(&p, &lambda_plus(&lam), 48, TRUNC)
                .map_err(|e| e.to_string())?;
            let cfac = rat_to_f64(
                &c_eval(
                    &p.dual(),
                    &invert_point(&gamma(&p, &lam).map_err(|e| e.to_string())?),
                )
                .map_err(|e| e.to_string())?,
            );
            err((full - plus * cfac).norm() <= 1e-6 * full.norm(), || {
                format!("full residue factorization at {lam:?}")
            })?;
        }
        Ok(())
    });

    rep.run("criterion 9: transform round trip", || {
        let grid = TorusGrid::new(&p, 48, TRUNC);
        let support = downset(&[1, 0]);
        // A polynomial spanning the whole target span, with asymmetric
        // coefficients so every transform coefficient is exercised.
        let mut f = Poly::zero(2);
        for (e, c) in support.iter().zip([2, -3, 5, 7, -1]) {
            f.add_term(Exponent(e.clone()), ratio(c, 4));
        }
        let rep9 = transform_roundtrip(&p, &grid, &f, &support, 48, TRUNC)
            .map_err(|e| e.to_string())?;
        err(rep9.max_err <= 1e-6, || {
            format!("round trip error {:.3e}", rep9.max_err)
        })?;
        err(
            (rep9.k - rep9.k_cross).norm() <= 1e-6 * rep9.k.norm(),
            || format!("k = {} vs cross-check {}", rep9.k, rep9.k_cross),
        )?;
        // The transform coefficient of E_mu itself is the diagonal norm.
        let lam = vec![1i64, 0];
        let e_lam = normalize_e(&p, &lam).map_err(|e| e.to_string())?;
        let diag = (transform_coeff(&grid, &p, &e_lam, &lam).map_err(|e| e.to_string())?
            / grid.one_one())
        .re;
        let want = rat_to_f64(&norm_ratio_ns(&p, &lam).map_err(|e| e.to_string())?);
        err((diag - want).abs() <= 1e-6 * want.abs(), || {
            format!("transform coefficient at {lam:?}: {diag} vs {want}")
        })
    });

    rep.run("criterion 10: rank-three smoke test", || {
        let p3 = params(3);
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        for trial in 0..3 {
            let mut f = Poly::zero(3);
            for _ in 0..4 {
                let e: Vec<i64> = (0..3).map(|_| rng.gen_range(-2..=2)).collect();
                f.add_term(Exponent(e), ratio(rng.gen_range(-5..=5), rng.gen_range(1..=5)));
            }
            let failures = check_relations(&p3, &f).map_err(|e| e.to_string())?;
            err(failures.is_empty(), || format!("trial {trial}: {failures:?}"))?;
        }
        let mut lams = vec![vec![0i64, 0, 0]];
        lams.extend(weyl_orbit(&[1, 0, 0]));
        for lam in lams {
            let f = compute_ns(&p3, &lam).map_err(|e| e.to_string())?;
            err(f.coeff(&Exponent(lam.clone())).is_one(), || {
                format!("{lam:?} is not monic")
            })?;
            let gam = gamma(&p3, &lam).map_err(|e| e.to_string())?;
            for i in 1..=3 {
                let g = apply_y(&p3, i, &f).map_err(|e| e.to_string())?;
                err(g == f.scale(&gam[i - 1]), || {
                    format!("{lam:?}: Y_{i} eigenvalue is off")
                })?;
            }
        }
        Ok(())
    });

    // Time budgets for the heavyweight criteria.
    let budget = [
        ("criterion 1", 60.0),
        ("criterion 2", 120.0),
        ("criterion 7", 600.0),
        ("criterion 10", 300.0),
    ];
    for (prefix, limit) in budget {
        let line = rep
            .lines
            .iter()
            .find(|(name, _, _)| name.starts_with(prefix))
            .expect("criterion was run");
        assert!(
            line.2 < limit,
            "{prefix} took {:.1}s, budget {limit}s",
            line.2
        );
    }
    let failed: Vec<&str> = rep
        .lines
        .iter()
        .filter(|(_, pass, _)| !pass)
        .map(|(name, _, _)| name.as_str())
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
