//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits nonzero if any fails.
//!
//! Pinned tolerances: every comparison is exact (subspace equality over ℚ or F_101, zero slack).
//! Time limits: 2 s per duality fixture, 10 s per criterion, 120 s per `suite --seeds 25` run.

use std::process::Command;
use std::time::{Duration, Instant};

use graded_morita::action::{check_pa_prp_equivalence, restrict_global_intersection, skew_group_algebra, GlobalAction};
use graded_morita::algebra::GradedAlgebra;
use graded_morita::fixtures::{self, fixture, Bounds};
use graded_morita::linalg::{Field, Subspace};
use graded_morita::morita::{smash_context, AbstractContext, ActionMoritaEquivalence};
use graded_morita::report::VerificationReport;
use graded_morita::smash::{canonical_partial_action, duality_iso, partial_smash_is_invariant};
use graded_morita::suite::{action_pipeline, composition_report, restricted_pipeline, round_trip_report, seed_group};
use graded_morita::theorems::{verify_duality, verify_geq_smash, verify_globalization_geq, verify_sg};
use graded_morita::Error;

const Q: Field = Field::Rationals;
const CRITERION_LIMIT: Duration = Duration::from_secs(10);
const DUALITY_LIMIT: Duration = Duration::from_secs(2);
const SUITE_LIMIT: Duration = Duration::from_secs(120);

type Outcome = Result<String, String>;

fn algebra(id: &str) -> GradedAlgebra {
    fixture(id, Q).unwrap().algebra().unwrap().clone()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passed(r: &VerificationReport, what: &str) -> Result<(), String> {
    match r.first_failure() {
        None => Ok(()),
        Some(c) => Err(format!("{what}: {} (expected {}, computed {})", c.name, c.expected, c.computed)),
    }
}

fn has_checks(r: &VerificationReport, names: &[&str], what: &str) -> Result<(), String> {
    for n in names {
        let c = r.checks.iter().find(|c| c.name == *n).ok_or_else(|| format!("{what}: no check named `{n}`"))?;
        ensure(c.pass, || format!("{what}: `{n}` failed"))?;
    }
    Ok(())
}

fn c1_duality() -> Outcome {
    let mut inputs: Vec<(String, GradedAlgebra)> = ["F1", "F2", "F4", "F5"].iter().map(|id| (id.to_string(), algebra(id))).collect();
    for seed in 0..10 {
        inputs.push((format!("seed {seed}"), fixtures::random_graded_algebra(seed, &seed_group(seed), Bounds::default(), Q)));
    }
    let mut slowest = Duration::ZERO;
    for (name, b) in &inputs {
        let start = Instant::now();
        let r = verify_duality(b, None).map_err(|e| format!("{name}: {e}"))?;
        let iso = duality_iso(b).map_err(|e| format!("{name}: {e}"))?;
        let took = start.elapsed();
        slowest = slowest.max(took);
        passed(&r, name)?;
        let n = b.group().order();
        ensure(iso.skew.dim() == n * n * b.dim() && iso.fmat.algebra.dim() == n * n * b.dim(), || {
            format!("{name}: dim (B#G) x| G = {}, dim FMat = {}, |G|^2 dim B = {}", iso.skew.dim(), iso.fmat.algebra.dim(), n * n * b.dim())
        })?;
        ensure(took < DUALITY_LIMIT, || format!("{name}: took {took:?}"))?;
    }
    Ok(format!("{} inputs, slowest {slowest:.2?}", inputs.len()))
}

fn c2_geq() -> Outcome {
    let six = ["XY = S", "SX = X", "YX = B'", "XB' = X", "B'Y = Y", "YS = Y"];
    let ids = ["F1", "F2", "F4", "F5", "SF3", "SF6"];
    for id in ids {
        let b = algebra(id);
        ensure(b.is_idempotent_graded(), || format!("{id} should be idempotent"))?;
        let w = verify_geq_smash(&b).map_err(|e| format!("{id}: {e}"))?;
        has_checks(&w.report, &six, id)?;
        passed(&w.report, id)?;
    }
    Ok(format!("six equalities on {}", ids.join(", ")))
}

fn c3_hierarchy() -> Outcome {
    let (mut strong, mut psg, mut idem, mut other) = (0, 0, 0, 0);
    for seed in 0..120 {
        let b = fixtures::random_graded_algebra(seed, &seed_group(seed), Bounds::default(), Q);
        let (s, p, i) = (b.is_strongly_graded(), b.is_partially_strongly_graded(), b.is_idempotent_graded());
        ensure(!s || p, || format!("seed {seed}: strong but not psg"))?;
        ensure(!p || i, || format!("seed {seed}: psg but not idempotent"))?;
        match (s, p, i) {
            (true, _, _) => strong += 1,
            (false, true, _) => psg += 1,
            (false, false, true) => idem += 1,
            _ => other += 1,
        }
    }
    let (f1, f4, sf3, f2) = (algebra("F1"), algebra("F4"), algebra("SF3"), algebra("F2"));
    ensure(f1.is_strongly_graded() && f4.is_strongly_graded(), || "F1 and F4 should be strongly graded".into())?;
    ensure(sf3.is_partially_strongly_graded() && !sf3.is_strongly_graded(), || "SF3 should separate strong from psg".into())?;
    ensure(f2.is_idempotent_graded() && !f2.is_partially_strongly_graded(), || "F2 should separate psg from idempotent".into())?;
    Ok(format!("120 algebras: {strong} strong, {psg} psg only, {idem} idempotent only, {other} neither"))
}

fn c4_skew_laws() -> Outcome {
    let (mut global, mut idempotent_checked) = (0, 0);
    for seed in 0..30 {
        let (res, _) = fixtures::random_product_partial_action(seed, &seed_group(seed), Bounds::default(), Q);
        let alpha = &res.alpha;
        let s = skew_group_algebra(alpha).map_err(|e| format!("seed {seed}: {e}"))?.algebra;
        ensure(s.algebra().associativity_failure().is_none(), || format!("seed {seed}: skew algebra not associative"))?;
        ensure(s.is_partially_strongly_graded(), || format!("seed {seed}: skew algebra not psg"))?;
        ensure(s.is_strongly_graded() == alpha.is_global(), || format!("seed {seed}: strong grading disagrees with globality"))?;
        global += usize::from(alpha.is_global());
        for pa in [alpha.clone(), restrict_global_intersection(&res.beta, &res.ideal).map_err(|e| e.to_string())?.alpha] {
            if !pa.has_idempotent_domains() {
                continue;
            }
            let verdict = check_pa_prp_equivalence(&pa).map_err(|e| format!("seed {seed}: {e}"))?;
            ensure(verdict == pa.check_product().is_ok(), || format!("seed {seed}: pa-prp disagrees with validator"))?;
            idempotent_checked += 1;
        }
    }
    Ok(format!("30 product partial actions ({global} global), pa-prp agreed on {idempotent_checked} idempotent actions"))
}

fn c5_restsmash() -> Outcome {
    let ids = ["F1", "F4", "F5", "SF3", "SF6"];
    for id in ids {
        let c = canonical_partial_action(&algebra(id)).map_err(|e| format!("{id}: {e}"))?;
        passed(&c.report, id)?;
        ensure(c.restriction.alpha.passed_product(), || format!("{id}: gamma is not a ppa"))?;
        has_checks(&c.report, &["sum_t beta_t(I) = B#G", "gamma is a product partial action"], id)?;
    }
    let (f1, sf6) = (algebra("F1"), algebra("SF6"));
    ensure(partial_smash_is_invariant(&f1) && f1.is_strongly_graded(), || "F1: expected invariant and strongly graded".into())?;
    ensure(!partial_smash_is_invariant(&sf6) && !sf6.is_strongly_graded(), || "SF6: expected neither".into())?;
    Ok(format!("{} psg fixtures; sgchar on F1 (invariant) and SF6 (not invariant)", ids.len()))
}

fn c6_sg() -> Outcome {
    let mut inputs: Vec<(String, GradedAlgebra)> = ["F1", "F4", "SF3", "SF6"].iter().map(|id| (id.to_string(), algebra(id))).collect();
    for seed in 0..10 {
        inputs.push((format!("seed {seed}"), fixtures::random_psg_algebra(seed, &seed_group(seed), graded_morita::suite::SMALL, Q)));
    }
    for (name, b) in &inputs {
        let w = verify_sg(b).map_err(|e| format!("{name}: {e}"))?;
        has_checks(&w.report, &["X'Y' = I x| G", "Y'X' = B'", "B -> B' is onto", "B -> B' is injective"], name)?;
        let g = b.group();
        for t in g.elements() {
            let ti = g.inv(t);
            has_checks(&w.report, &[&format!("X'_{t} Y'_{ti} = I_{t} d_1"), &format!("Y'_{t} X'_{ti} = D_{t} e_11 d_1")], name)?;
        }
        passed(&w.report, name)?;
    }
    Ok(format!("{} psg algebras", inputs.len()))
}

fn c7_globalization() -> Outcome {
    let four = ["(B x| G) X = X", "Y (B x| G) = Y", "XY = B x| G", "YX = A x| G"];
    for id in ["F3", "F6"] {
        let r = fixture(id, Q).unwrap().restriction().unwrap().clone();
        let w = verify_globalization_geq(&r).map_err(|e| format!("{id}: {e}"))?;
        has_checks(&w.report, &four, id)?;
        passed(&w.report, id)?;
    }
    let f3 = fixture("F3", Q).unwrap().restriction().unwrap().clone();
    let linking = verify_globalization_geq(&f3).unwrap().context.to_abstract().map_err(|e| e.to_string())?;
    ensure(linking.linking().dim() == 9, || format!("F3 linking dim {}", linking.linking().dim()))?;
    let pad = fixture("K3PAD", Q).unwrap().restriction().unwrap().clone();
    ensure(matches!(verify_globalization_geq(&pad), Err(Error::NotMinimal)), || "K3PAD was not rejected".into())?;
    Ok("F3 and F6 pass, F3 linking dim 9, K3PAD rejected as not minimal".into())
}

fn c8_pipeline() -> Outcome {
    let mut runs = 0;
    for id in ["F3", "F6"] {
        let r = fixture(id, Q).unwrap().restriction().unwrap().clone();
        let ame = ActionMoritaEquivalence::trivial(&r.alpha).map_err(|e| format!("{id}: {e}"))?;
        let rep = action_pipeline(&ame).map_err(|e| format!("{id}: {e}"))?;
        ensure(rep.checks.iter().any(|c| c.name.contains("M_1/")), || format!("{id}: no degreewise equivalence checks"))?;
        passed(&rep, id)?;
        let rep = restricted_pipeline(&r.beta, &r.ideal).map_err(|e| format!("{id} restricted: {e}"))?;
        passed(&rep, &format!("{id} restricted"))?;
        runs += 2;
    }
    let swap = fixture("F3", Q).unwrap().restriction().unwrap().beta.clone();
    let full = Subspace::full(swap.algebra().dim(), Q);
    let rep = restricted_pipeline(&GlobalAction::clone(&swap), &full).map_err(|e| format!("swap on whole algebra: {e}"))?;
    passed(&rep, "swap on whole algebra")?;
    Ok(format!("{} pipelines", runs + 1))
}

fn c9_smash_context() -> Outcome {
    let trivial = AbstractContext::trivial(&algebra("F1"));
    let s = smash_context(&trivial).map_err(|e| format!("F1: {e}"))?;
    passed(&s.report, "F1 trivial context")?;
    let geq = verify_geq_smash(&algebra("F2")).map_err(|e| e.to_string())?.context.to_abstract().map_err(|e| e.to_string())?;
    let s2 = smash_context(&geq).map_err(|e| format!("F2: {e}"))?;
    passed(&s2.report, "F2 geq context")?;
    Ok(format!("C#G dims {} and {}", s.context.linking().dim(), s2.context.linking().dim()))
}

fn c10_round_trip() -> Outcome {
    let (mut strong_pairs, mut pairs) = (0, 0);
    for seed in 0..10 {
        let m = fixtures::random_context(seed, &seed_group(seed), Bounds::default(), Q);
        passed(&round_trip_report(&m).map_err(|e| format!("seed {seed}: {e}"))?, &format!("round trip seed {seed}"))?;
    }
    for seed in 0..12 {
        let (m, n) = fixtures::random_composable_pair(seed, &seed_group(seed), Bounds::default(), Q);
        let r = composition_report(&m, &n).map_err(|e| format!("pair {seed}: {e}"))?;
        passed(&r, &format!("pair {seed}"))?;
        pairs += 1;
        strong_pairs += usize::from(r.checks.iter().any(|c| c.name.contains("strong")));
    }
    Ok(format!("10 round trips, {pairs} compositions ({strong_pairs} with strong inputs)"))
}

fn run_suite(field: &str) -> Result<(Vec<u8>, Duration), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_graded-morita"))
        .args(["suite", "--seeds", "25", "--report", "machine", "--field", field])
        .output()
        .map_err(|e| e.to_string())?;
    let took = start.elapsed();
    ensure(out.status.code() == Some(0), || format!("{field}: exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)))?;
    Ok((out.stdout, took))
}

fn c11_suite() -> Outcome {
    let mut notes = Vec::new();
    for field in ["q", "fp:101"] {
        let (a, ta) = run_suite(field)?;
        let (b, tb) = run_suite(field)?;
        ensure(ta < SUITE_LIMIT && tb < SUITE_LIMIT, || format!("{field}: took {ta:?} and {tb:?}"))?;
        ensure(a == b, || format!("{field}: machine reports differ between runs"))?;
        notes.push(format!("{field} {:.1?}", ta.max(tb)));
    }
    Ok(format!("exit 0, byte-identical reports ({})", notes.join(", ")))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Duration); 11] = [
        ("1 duality", c1_duality, CRITERION_LIMIT),
        ("2 geq witness", c2_geq, CRITERION_LIMIT),
        ("3 psg hierarchy", c3_hierarchy, CRITERION_LIMIT),
        ("4 skew-algebra laws", c4_skew_laws, CRITERION_LIMIT),
        ("5 canonical partial action", c5_restsmash, CRITERION_LIMIT),
        ("6 sg witness", c6_sg, CRITERION_LIMIT),
        ("7 globalization", c7_globalization, CRITERION_LIMIT),
        ("8 action-equivalence pipeline", c8_pipeline, CRITERION_LIMIT),
        ("9 M#G", c9_smash_context, CRITERION_LIMIT),
        ("10 round trip and composition", c10_round_trip, CRITERION_LIMIT),
        ("11 suite --seeds 25", c11_suite, 4 * SUITE_LIMIT),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = outcome.and_then(|s| if took < limit { Ok(s) } else { Err(format!("took {took:?}, limit {limit:?}")) });
        match outcome {
            Ok(s) => println!("PASS criterion {name}: {s} [{took:.2?}]"),
            Err(s) => {
                failed += 1;
                println!("FAIL criterion {name}: {s} [{took:.2?}]");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
