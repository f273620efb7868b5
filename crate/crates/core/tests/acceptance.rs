//! Acceptance gate: one line per criterion, nonzero exit if any fails.

use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use obstruct_core::arith;
use obstruct_core::coding_bounds::{
    brute_force_code_oracle, griesmer_inequality, griesmer_max_distance, log_threshold_inequality, min_s_log,
    min_s_sqrt, involution_count, GriesmerQuery,
};
use obstruct_core::groups::{enumerate_by_order, has_noncyclic_abelian_subgroup, GroupElement, SpaceFormGroup};
use obstruct_core::linear_actions::{build_sphere_action, MonomialRotationMatrix, RationalAngle};
use obstruct_core::obstruction_engine::{
    apply_all, default_q_grid, proof_sweep_ccs_cases, proof_sweep_ccslog_induction, proof_sweep_scc5, Flag,
    Hypotheses,
};
use obstruct_core::steenrod::{
    act_on_model, act_word_on_model, adem_normalize, identities, verify_identity, Letter, ModelClass, SteenrodWord,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Smallest singular value of `M − I` separating "has eigenvalue 1" from not.
const EIGEN_TOL: f64 = 1e-9;
const SEED: u64 = 0x5eed_0b57;

struct Outcome {
    pass: bool,
    detail: String,
}

fn ok(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn word(p: u64, s: &str) -> SteenrodWord {
    SteenrodWord::parse(p, s).unwrap()
}

fn criterion_1() -> Outcome {
    for p in [3u64, 5, 7, 11] {
        let lhs = [(1, word(p, &format!("P{p} b")))];
        let rhs = [(1, word(p, &format!("P1 b P{}", p - 1))), (1, word(p, &format!("b P{p}")))];
        if !verify_identity(&lhs, &rhs, p).unwrap() {
            return ok(false, format!("P^p b relation fails at p = {p}"));
        }
        let mut fact = 1u64;
        for i in 1..p {
            fact = fact * i % p;
            let l = [(1, word(p, "P1").power(i as usize))];
            let r = [(fact, word(p, &format!("P{i}")))];
            if !verify_identity(&l, &r, p).unwrap() {
                return ok(false, format!("(P1)^{i} fails at p = {p}"));
            }
        }
        if !identities(p).unwrap().iter().all(|row| row.holds) {
            return ok(false, format!("identity table fails at p = {p}"));
        }
    }
    ok(true, "p in {3,5,7,11}")
}

/// `binom(k, j) mod p` by Pascal's rule.
fn pascal_mod(k: u64, j: u64, p: u64) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..k {
        let mut next = vec![1u64; row.len() + 1];
        for t in 1..row.len() {
            next[t] = (row[t - 1] + row[t]) % p;
        }
        row = next;
    }
    row.get(j as usize).copied().unwrap_or(0) % p
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for p in [3u64, 5] {
        for j in 0..=20u64 {
            for k in 0..=20u64 {
                let got = act_word_on_model(&SteenrodWord::new(p, vec![Letter::Power(j)]).unwrap(), ModelClass::x_pow(k));
                let expect = pascal_mod(k, j, p);
                let target = k + j * (p - 1);
                let others_zero = got.terms().all(|t| t.exponent == target);
                if got.coefficient(target) != expect || !others_zero {
                    return ok(false, format!("P{j}(x^{k}) at p = {p}"));
                }
            }
        }
        for _ in 0..300 {
            let len = rng.gen_range(1..=4);
            let letters: Vec<Letter> = (0..len)
                .map(|_| if rng.gen_bool(0.2) { Letter::Bockstein } else { Letter::Power(rng.gen_range(1..=7)) })
                .collect();
            let w = SteenrodWord::new(p, letters).unwrap();
            let normal = adem_normalize(&w);
            for k in 0..=20u64 {
                if act_word_on_model(&w, ModelClass::x_pow(k)) != act_on_model(&normal, ModelClass::x_pow(k)) {
                    return ok(false, format!("{w} on x^{k} at p = {p}"));
                }
            }
        }
    }
    ok(true, "p in {3,5}, j,k <= 20, 300 random words each")
}

fn group_checks(g: &SpaceFormGroup) -> Result<(), String> {
    let (a, b, c, d) = (g.a(), g.b(), g.c(), g.d());
    let e = GroupElement::IDENTITY;
    let (alpha, beta) = (g.alpha(), g.beta());
    let conj = g.multiply(g.multiply(beta, alpha), g.inverse(beta));
    if g.pow(alpha, a) != e || g.pow(beta, b) != e || conj != g.pow(alpha, c) {
        return Err("presentation".into());
    }
    if g.element_order(alpha) != a || g.element_order(beta) != b || g.elements().count() as u64 != a * b || g.order() != a * b {
        return Err("order".into());
    }
    let h = g.cyclic_subgroup_index();
    if h.index != d || h.order * d != a * b {
        return Err("index".into());
    }
    // ⟨α, β^d⟩ is cyclic of order ab/d, generated by αβ^d, and normal.
    let gen = g.multiply(h.generators.0, h.generators.1);
    if g.element_order(gen) != h.order {
        return Err("cyclic subgroup".into());
    }
    for x in [alpha, beta] {
        let y = g.multiply(g.multiply(x, gen), g.inverse(x));
        if y.j % d != 0 {
            return Err("normality".into());
        }
    }
    if has_noncyclic_abelian_subgroup(g, u64::MAX).map_err(|e| e.to_string())? {
        return Err("Z_p x Z_p subgroup".into());
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    use rayon::prelude::*;
    let groups = enumerate_by_order(10_000, None).unwrap();
    let bad: Vec<String> = groups
        .par_iter()
        .filter_map(|g| group_checks(g).err().map(|why| format!("{g}: {why}")))
        .collect();
    ok(bad.is_empty(), format!("{} triples with ab <= 10^4{}", groups.len(), bad.first().map(|s| format!("; {s}")).unwrap_or_default()))
}

fn min_singular_of_shift(m: &MonomialRotationMatrix) -> f64 {
    let dense = m.to_dense();
    let n = dense.len();
    let mat = DMatrix::from_fn(n, n, |i, j| dense[i][j] - if i == j { 1.0 } else { 0.0 });
    mat.singular_values().min()
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut numeric = 0;
    for (p, n) in [(3u64, 5u64), (3, 17), (3, 29), (5, 9), (5, 29), (7, 13)] {
        let bundle = build_sphere_action(p, n).unwrap();
        if !bundle.is_free_representation(u64::MAX).unwrap() {
            return ok(false, format!("(p, n) = ({p}, {n}) not free"));
        }
        if !bundle.diagonal_circle_is_free() {
            return ok(false, format!("(p, n) = ({p}, {n}) Hopf circle not free"));
        }
        let g = bundle.group();
        for t in 0..40 {
            let x = if t == 0 {
                GroupElement::IDENTITY
            } else {
                g.element(rng.gen_range(0..g.a()), rng.gen_range(0..g.b()))
            };
            let m = bundle.rep(x);
            let sv = min_singular_of_shift(&m);
            if m.eigen_angle_zero() != (sv < EIGEN_TOL) {
                return ok(false, format!("({p}, {n}) element {x:?}: sigma_min = {sv:e}"));
            }
            numeric += 1;
        }
        for k in 1..12 {
            let theta = RationalAngle::of(k, 12);
            if bundle.diagonal_circle_element(theta).eigen_angle_zero() {
                return ok(false, format!("({p}, {n}) circle point {theta}"));
            }
        }
    }
    ok(true, format!("6 bundles exhaustive; {numeric} numeric samples at tol {EIGEN_TOL:e}"))
}

fn criterion_5() -> Outcome {
    let g49 = griesmer_inequality(GriesmerQuery::new(49, 5, 1, 3).unwrap());
    if !g49.holds {
        return ok(false, "n = 49");
    }
    for n in (37..=45).step_by(2) {
        let (s, j) = (min_s_sqrt(n), involution_count(n));
        if !griesmer_inequality(GriesmerQuery::new(n, s, 1, j).unwrap()).holds {
            return ok(false, format!("n = {n}, s = {s}, j = {j}"));
        }
    }
    let bad = (35..=10_000u64)
        .filter(|n| n % 4 == 1)
        .find(|&n| !log_threshold_inequality(n, min_s_log(n)).unwrap());
    match bad {
        Some(n) => ok(false, format!("log threshold fails at n = {n}")),
        None => ok(true, "n = 49, odd 37..45, log threshold 35..10^4"),
    }
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    for k in 1..=4usize {
        for n in k..=14usize {
            let r = brute_force_code_oracle(n, k).unwrap();
            if r.best_distance > griesmer_max_distance(n as u64, k as u64) {
                return ok(false, format!("[{n},{k}] reaches d = {}", r.best_distance));
            }
            checked += 1;
        }
    }
    let r = brute_force_code_oracle(7, 3).unwrap();
    ok(r.best_distance == 4, format!("{checked} (n, k) pairs; [7,3] optimum d = {}", r.best_distance))
}

fn criterion_7() -> Outcome {
    let ccs = proof_sweep_ccs_cases(&default_q_grid(), 10_000).unwrap();
    let scc5 = proof_sweep_scc5(100_000).unwrap();
    let induction = proof_sweep_ccslog_induction(10_000).unwrap();
    ok(
        ccs.pass && scc5.holds_from_261 && scc5.closing_at_400 && scc5.closing_range && induction.pass,
        format!(
            "bands {} checks; n >= {} (real j), n >= {} (floor j); induction {} checks",
            ccs.checks, scc5.real_threshold, scc5.floor_threshold, induction.checks
        ),
    )
}

fn criterion_8() -> Outcome {
    let mut cases = 0;
    for n in (3..=200u64).step_by(2) {
        for p in arith::primes_up_to((n + 1) / 2).into_iter().filter(|&p| p > 2 && (n + 1) % (2 * p) == 0) {
            let r = (n + 1) / (2 * p);
            let at = apply_all(&Hypotheses::new(n, r, [Flag::RationalSphereCover]).unwrap());
            let above = apply_all(&Hypotheses::new(n, r + 1, [Flag::RationalSphereCover]).unwrap());
            if at.excludes_cd(p) || !above.excludes_cd(p) {
                return ok(false, format!("n = {n}, p = {p}, r = {r}"));
            }
            cases += 1;
        }
    }
    ok(true, format!("{cases} (p, n) pairs"))
}

fn criterion_9() -> Outcome {
    let dim7 = apply_all(&Hypotheses::new(7, 1, [Flag::RationalSphereCover, Flag::CircleActionOnly]).unwrap());
    let dim13 = apply_all(&Hypotheses::new(13, 2, [Flag::RationalSphereCover]).unwrap());
    let wang = apply_all(&Hypotheses::new(25, 5, []).unwrap());
    ok(
        dim7.odd_order_cyclic_forced() && dim13.is_cyclic_forced() && wang.is_cyclic_forced(),
        "n = 7 circle, n = 13 r = 2, n = 25 r = 5",
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Duration); 9] = [
        ("Steenrod identity suite", criterion_1, Duration::from_secs(1)),
        ("model-algebra oracle", criterion_2, Duration::from_secs(5)),
        ("group suite", criterion_3, Duration::from_secs(60)),
        ("representation freeness", criterion_4, Duration::from_secs(10)),
        ("Griesmer reproduction", criterion_5, Duration::from_secs(30)),
        ("brute-force code oracle", criterion_6, Duration::from_secs(120)),
        ("proof sweeps", criterion_7, Duration::from_secs(60)),
        ("engine sharpness", criterion_8, Duration::from_secs(10)),
        ("engine regression fixtures", criterion_9, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let pass = out.pass && elapsed <= *budget;
        if !pass {
            failed += 1;
        }
        println!(
            "criterion {}: {} {name}: {} [{:.2?} of {:?}]",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            out.detail,
            elapsed,
            budget
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
