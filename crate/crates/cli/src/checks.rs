//! `verify paper-checks`: every finite claim, one row each.

use serde::Serialize;

use obstruct_core::arith;
use obstruct_core::coding_bounds::{
    griesmer_inequality, involution_count, log_threshold_inequality, min_s_log, min_s_sqrt, GriesmerQuery,
};
use obstruct_core::linear_actions::build_sphere_action;
use obstruct_core::obstruction_engine::{
    apply_all, default_q_grid, proof_sweep_ccs_cases, proof_sweep_ccslog_induction, proof_sweep_scc5, Flag,
    Hypotheses,
};
use obstruct_core::steenrod::identities;

use crate::{emit, CmdResult, Format, Status};

const GROUPS: [&str; 5] = ["steenrod", "coding", "sweeps", "representations", "engine"];

#[derive(clap::Args)]
pub struct CheckArgs {
    /// Upper end of the rank-band and logarithmic-threshold sweeps.
    #[arg(long, default_value_t = 10_000)]
    n_max: u64,
    /// Upper end of the n ≥ 261 sweep.
    #[arg(long, default_value_t = 100_000)]
    scc5_n_max: u64,
    /// Run only one group: steenrod, coding, sweeps, representations, engine.
    #[arg(long)]
    only: Option<String>,
}

#[derive(Serialize)]
struct Row {
    group: &'static str,
    check: String,
    anchor: &'static str,
    pass: bool,
    detail: String,
}

fn steenrod_rows() -> Vec<Row> {
    [3u64, 5, 7, 11]
        .into_iter()
        .map(|p| {
            let rows = identities(p).expect("odd prime");
            let failed: Vec<&str> = rows.iter().filter(|r| !r.holds).map(|r| r.identity.as_str()).collect();
            Row {
                group: "steenrod",
                check: format!("P{p} b relation and (P1)^i = i!*Pi, p = {p}"),
                anchor: "steenrod-identities",
                pass: failed.is_empty(),
                detail: if failed.is_empty() { format!("{} identities", rows.len()) } else { failed.join("; ") },
            }
        })
        .collect()
}

fn coding_rows(n_max: u64) -> Vec<Row> {
    let g49 = griesmer_inequality(GriesmerQuery::new(49, 5, 1, 3).expect("valid"));
    let mut rows = vec![Row {
        group: "coding",
        check: "Griesmer inequality at n = 49, s = 5, c = 1, j = 3".into(),
        anchor: "cor:AK",
        pass: g49.holds,
        detail: format!("{} < {}", g49.lhs, g49.rhs),
    }];
    let bad: Vec<u64> = (37..=45u64)
        .step_by(2)
        .filter(|&n| {
            let q = GriesmerQuery::new(n, min_s_sqrt(n), 1, involution_count(n)).expect("valid");
            !griesmer_inequality(q).holds
        })
        .collect();
    rows.push(Row {
        group: "coding",
        check: "Griesmer inequality, odd 37 <= n <= 45, least s >= sqrt(n) - 2".into(),
        anchor: "cor:AK",
        pass: bad.is_empty(),
        detail: if bad.is_empty() { "5 dimensions".into() } else { format!("fails at {bad:?}") },
    });
    let first_bad = (35..=n_max)
        .filter(|n| n % 4 == 1)
        .find(|&n| !log_threshold_inequality(n, min_s_log(n)).expect("n >= 5"));
    rows.push(Row {
        group: "coding",
        check: format!("log threshold, n = 1 mod 4 in [35, {n_max}], least s >= log_4/3(n+3) - 8"),
        anchor: "cor:AK",
        pass: first_bad.is_none(),
        detail: first_bad.map(|n| format!("fails at n = {n}")).unwrap_or_else(|| "all hold".into()),
    });
    rows
}

fn sweep_rows(n_max: u64, scc5_n_max: u64) -> Result<Vec<Row>, anyhow::Error> {
    let ccs = proof_sweep_ccs_cases(&default_q_grid(), n_max)?;
    let induction = proof_sweep_ccslog_induction(n_max)?;
    let scc5 = proof_sweep_scc5(scc5_n_max)?;
    Ok(vec![
        Row {
            group: "sweeps",
            check: format!("three rank bands, q in {{1, 3/2, ..., 50}}, n <= {n_max}"),
            anchor: "thm:CCS",
            pass: ccs.pass,
            detail: format!("{} (q, p, n) triples", ccs.checks),
        },
        Row {
            group: "sweeps",
            check: format!("induction step, n = 1 mod 4 in (49, {n_max}]"),
            anchor: "thm:CCSlogPLUS",
            pass: induction.pass,
            detail: format!("{} (n, p, r) triples", induction.checks),
        },
        Row {
            group: "sweeps",
            check: format!("(n+1)/10 > log2(n+1-12j) + j + 3, 261 <= n <= {scc5_n_max}"),
            anchor: "thm:SCCat5",
            pass: scc5.holds_from_261,
            detail: format!("holds from n = {} (j real), n = {} (j floor)", scc5.real_threshold, scc5.floor_threshold),
        },
        Row {
            group: "sweeps",
            check: "11n/960 + j/16 >= 5 - 35/64 - 1/10 at j = 0, n = 400".into(),
            anchor: "thm:SCCat5",
            pass: scc5.closing_at_400,
            detail: "exact rational".into(),
        },
        Row {
            group: "sweeps",
            check: format!("closing inequality and dimension bound, 400 <= n <= {scc5_n_max}"),
            anchor: "thm:SCCat5",
            pass: scc5.closing_range,
            detail: "both ends of 0 <= j < (n+1)/15".into(),
        },
    ])
}

fn representation_rows() -> Vec<Row> {
    [(3u64, 5u64), (3, 17), (3, 29), (5, 9), (5, 29), (7, 13)]
        .into_iter()
        .map(|(p, n)| {
            let bundle = build_sphere_action(p, n).expect("2p | n+1");
            let free = bundle.is_free_representation(u64::MAX).expect("no cap");
            let hopf = bundle.diagonal_circle_is_free();
            let g = bundle.group();
            Row {
                group: "representations",
                check: format!("Γ({}, {}, {}) acts freely on S^{n} with a free Hopf circle", g.a(), g.b(), g.c()),
                anchor: "exa:SCC",
                pass: free && hopf,
                detail: format!("p = {p}, |Γ| = {}, free = {free}, hopf_free = {hopf}", g.order()),
            }
        })
        .collect()
}

fn engine_rows() -> Vec<Row> {
    let mut bad = Vec::new();
    let mut cases = 0;
    for n in (3..=200u64).step_by(2) {
        for p in arith::primes_up_to((n + 1) / 2).into_iter().filter(|&p| p > 2 && (n + 1) % (2 * p) == 0) {
            let r = (n + 1) / (2 * p);
            let at = apply_all(&Hypotheses::new(n, r, [Flag::RationalSphereCover]).expect("valid"));
            let above = apply_all(&Hypotheses::new(n, r + 1, [Flag::RationalSphereCover]).expect("valid"));
            if at.excludes_cd(p) || !above.excludes_cd(p) {
                bad.push(format!("(n, p) = ({n}, {p})"));
            }
            cases += 1;
        }
    }
    let report = |n, r, flags: &[Flag]| apply_all(&Hypotheses::new(n, r, flags.iter().copied()).expect("valid"));
    let fixture = |check: &str, anchor, pass| Row {
        group: "engine",
        check: check.into(),
        anchor,
        pass,
        detail: String::new(),
    };
    vec![
        Row {
            group: "engine",
            check: "C_p allowed at r = (n+1)/(2p), excluded at r + 1, n <= 200".into(),
            anchor: "thm:Room",
            pass: bad.is_empty(),
            detail: if bad.is_empty() { format!("{cases} (n, p) pairs") } else { bad.join(", ") },
        },
        fixture(
            "n = 7, circle, rational sphere: odd-order subgroups cyclic",
            "cor:dim7",
            report(7, 1, &[Flag::RationalSphereCover, Flag::CircleActionOnly]).odd_order_cyclic_forced(),
        ),
        fixture(
            "n = 13, r = 2, rational sphere: cyclic",
            "cor:dim13",
            report(13, 2, &[Flag::RationalSphereCover]).is_cyclic_forced(),
        ),
        fixture("n = 25, r = 5: cyclic", "thm:Wang07", report(25, 5, &[]).is_cyclic_forced()),
    ]
}

pub fn cmd_paper_checks(format: Format, args: CheckArgs) -> CmdResult {
    if let Some(g) = &args.only {
        if !GROUPS.contains(&g.as_str()) {
            return Err(anyhow::anyhow!("unknown group {g:?}; expected one of {}", GROUPS.join(", ")).into());
        }
    }
    if args.n_max < 49 {
        return Err(anyhow::anyhow!("--n-max must be at least 49").into());
    }
    if args.scc5_n_max < 400 {
        return Err(anyhow::anyhow!("--scc5-n-max must be at least 400").into());
    }
    let wanted = |g: &str| args.only.as_deref().is_none_or(|o| o == g);
    let mut rows = Vec::new();
    if wanted("steenrod") {
        rows.extend(steenrod_rows());
    }
    if wanted("coding") {
        rows.extend(coding_rows(args.n_max));
    }
    if wanted("sweeps") {
        rows.extend(sweep_rows(args.n_max, args.scc5_n_max)?);
    }
    if wanted("representations") {
        rows.extend(representation_rows());
    }
    if wanted("engine") {
        rows.extend(engine_rows());
    }
    let all = rows.iter().all(|r| r.pass);
    emit(format, &rows, || {
        let w = rows.iter().map(|r| r.check.chars().count()).max().unwrap_or(0);
        let mut s = String::new();
        for r in &rows {
            let pad = w - r.check.chars().count();
            s.push_str(&format!(
                "{} {:<16} {}{}  {:<20} {}\n",
                if r.pass { "PASS" } else { "FAIL" },
                r.group,
                r.check,
                " ".repeat(pad),
                r.anchor,
                r.detail
            ));
        }
        s.push_str(&format!("{} of {} checks passed\n", rows.iter().filter(|r| r.pass).count(), rows.len()));
        s
    });
    Ok(if all { Status::Ok } else { Status::CheckFailed })
}
