//! The batch of verifications run by `suite`: every registered fixture plus generator seeds.

use rayon::prelude::*;

use crate::action::{check_pa_prp_equivalence, skew_group_algebra, GlobalAction};
use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::fixtures::{self, fixture, Bounds};
use crate::group::FiniteGroup;
use crate::linalg::{Field, Subspace};
use crate::morita::{
    action_equivalence_to_sge, compose_contexts, corner_context, linking_algebra, restrict_action_equivalence, smash_context,
    validate_action_equivalence, AbstractContext, ActionMoritaEquivalence,
};
use crate::report::VerificationReport;
use crate::theorems::{
    verify_duality, verify_eq_strong_gr, verify_geq_smash, verify_globalization_geq, verify_invsgeq,
    verify_moritaglob_consequences, verify_partialrep, verify_sg,
};

type Run = Box<dyn Fn(Field) -> Result<VerificationReport> + Send + Sync>;

/// One verification: a theorem id, the input it runs on and the closure producing its report.
pub struct Job {
    pub theorem: String,
    pub fixture: String,
    run: Run,
}

impl Job {
    fn new(theorem: &str, fixture: impl Into<String>, run: impl Fn(Field) -> Result<VerificationReport> + Send + Sync + 'static) -> Job {
        Job { theorem: theorem.into(), fixture: fixture.into(), run: Box::new(run) }
    }

    /// Runs the job; an error becomes a report with one failed check naming it.
    pub fn run(&self, field: Field) -> VerificationReport {
        let mut r = match (self.run)(field) {
            Ok(r) => r,
            Err(e) => {
                let mut r = VerificationReport::new(self.theorem.clone(), "");
                r.holds(format!("error: {e}"), false);
                r
            }
        };
        r.theorem = self.theorem.clone();
        r.fixture = self.fixture.clone();
        r
    }
}

fn algebra(id: &str, f: Field) -> Result<GradedAlgebra> {
    fixture(id, f)?.algebra().cloned().ok_or_else(|| Error::Usage(format!("{id} is not an algebra fixture")))
}

fn restriction(id: &str, f: Field) -> Result<crate::action::Restriction> {
    fixture(id, f)?.restriction().cloned().ok_or_else(|| Error::Usage(format!("{id} is not an action fixture")))
}

/// The group used for generator seed `seed`.
pub fn seed_group(seed: u64) -> FiniteGroup {
    match seed % 4 {
        0 => FiniteGroup::cyclic(2),
        1 => FiniteGroup::cyclic(3),
        2 => FiniteGroup::klein4(),
        _ => FiniteGroup::cyclic(4),
    }
}

/// Small bounds for the theorems whose ambient algebra has dimension `|G|²·dim B`.
pub const SMALL: Bounds = Bounds { max_dim: 6 };

/// `validate_action_equivalence`, then the strong-graded-equivalence it induces, then `verify_invsgeq`.
pub fn action_pipeline(ame: &ActionMoritaEquivalence) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("action-equivalence", "");
    r.absorb("validate", validate_action_equivalence(ame));
    let w = action_equivalence_to_sge(ame)?;
    r.absorb("sge", w.report.clone());
    r.absorb("invsgeq", verify_invsgeq(&w.context)?);
    Ok(r)
}

/// Identity self-equivalence of `β` on `B` restricted to `ideal`, then the pipeline on the result.
pub fn restricted_pipeline(beta: &GlobalAction, ideal: &Subspace) -> Result<VerificationReport> {
    let ame = ActionMoritaEquivalence::trivial(&beta.as_partial())?;
    let (out, mut r) = restrict_action_equivalence(&ame, ideal)?;
    r.absorb("pipeline", action_pipeline(&out)?);
    Ok(r)
}

/// `strong ⇒ psg ⇒ idempotent` on one algebra.
pub fn hierarchy_report(b: &GradedAlgebra) -> VerificationReport {
    let (s, p, i) = (b.is_strongly_graded(), b.is_partially_strongly_graded(), b.is_idempotent_graded());
    let mut r = VerificationReport::new("hierarchy", "");
    r.holds("associative", b.algebra().associativity_failure().is_none());
    r.holds("strongly graded implies psg", !s || p);
    r.holds("psg implies idempotent", !p || i);
    r
}

/// Skew-algebra laws for a product partial action.
pub fn skew_laws_report(res: &crate::action::Restriction) -> Result<VerificationReport> {
    let alpha = &res.alpha;
    let s = skew_group_algebra(alpha)?;
    let mut r = VerificationReport::new("skew-laws", "");
    r.holds("A x| G associative", s.algebra.algebra().associativity_failure().is_none());
    r.holds("A x| G psg", s.algebra.is_partially_strongly_graded());
    r.holds("A x| G strongly graded iff alpha global", s.algebra.is_strongly_graded() == alpha.is_global());
    r.holds("psg iff product axioms", check_pa_prp_equivalence(alpha).is_ok());
    Ok(r)
}

/// `corner_context(linking_algebra(M))` gives back `M`.
pub fn round_trip_report(m: &AbstractContext) -> Result<VerificationReport> {
    let l = linking_algebra(m)?;
    let mut r = VerificationReport::new("round-trip", "");
    r.absorb("linking", l.report.clone());
    let back = corner_context(l.algebra(), &l.e)?.to_abstract()?;
    r.holds("corner context of the linking algebra is the original context", back == *m);
    Ok(r)
}

/// `compose_contexts` keeps graded equivalences and strong-graded-equivalences.
pub fn composition_report(m: &AbstractContext, n: &AbstractContext) -> Result<VerificationReport> {
    let c = compose_contexts(m, n)?;
    let (em, en, ec) = (m.embedded(), n.embedded(), c.embedded());
    let mut r = VerificationReport::new("composition", "");
    r.holds("inputs are graded equivalences", em.is_graded_equivalence() && en.is_graded_equivalence());
    r.holds("composite is a graded equivalence", ec.is_graded_equivalence());
    if em.is_strong_graded_equivalence() && en.is_strong_graded_equivalence() {
        r.holds("composite is a strong-graded-equivalence", ec.is_strong_graded_equivalence());
    }
    r.holds("composite relates the outer algebras", c.algebra_a() == m.algebra_a() && c.algebra_b() == n.algebra_b());
    Ok(r)
}

fn expect_error(theorem: &str, what: &str, e: Result<impl Sized>, ok: impl Fn(&Error) -> bool) -> Result<VerificationReport> {
    let mut r = VerificationReport::new(theorem, "");
    let hit = matches!(&e, Err(err) if ok(err));
    r.holds(format!("rejected: {what}"), hit);
    Ok(r)
}

fn fixture_jobs() -> Vec<Job> {
    let mut jobs = Vec::new();
    for id in ["F1", "F2", "F4", "F5", "SF3", "SF6"] {
        jobs.push(Job::new("duality", id, move |f| verify_duality(&algebra(id, f)?, None)));
    }
    for id in ["F1", "F2", "F4", "F5", "SF3", "SF6"] {
        jobs.push(Job::new("geq", id, move |f| Ok(verify_geq_smash(&algebra(id, f)?)?.report)));
    }
    for id in ["F1", "F4", "SF3", "SF6"] {
        jobs.push(Job::new("sg", id, move |f| Ok(verify_sg(&algebra(id, f)?)?.report)));
    }
    jobs.push(Job::new("sg", "F2", |f| {
        expect_error("sg", "F2 is not psg", verify_sg(&algebra("F2", f)?), |e| matches!(e, Error::PreconditionFailed(_)))
    }));
    for id in ["F1", "SF3", "SF6"] {
        jobs.push(Job::new("partialrep", id, move |f| Ok(verify_partialrep(&algebra(id, f)?)?.report)));
    }
    for id in ["F3", "F6"] {
        jobs.push(Job::new("globalization", id, move |f| Ok(verify_globalization_geq(&restriction(id, f)?)?.report)));
        jobs.push(Job::new("moritaglob", id, move |f| verify_moritaglob_consequences(&restriction(id, f)?.alpha)));
        jobs.push(Job::new("action-equivalence", id, move |f| {
            action_pipeline(&ActionMoritaEquivalence::trivial(&restriction(id, f)?.alpha)?)
        }));
        jobs.push(Job::new("reseqppa", id, move |f| {
            let r = restriction(id, f)?;
            restricted_pipeline(&r.beta, &r.ideal)
        }));
    }
    jobs.push(Job::new("globalization", "K3PAD", |f| {
        expect_error("globalization", "not minimal", verify_globalization_geq(&restriction("K3PAD", f)?), |e| {
            matches!(e, Error::NotMinimal)
        })
    }));
    for id in ["F1", "SF6"] {
        jobs.push(Job::new("invsgeq", id, move |f| verify_invsgeq(&verify_sg(&algebra(id, f)?)?.context)));
    }
    jobs.push(Job::new("eq-strong-gr", "F1", |f| Ok(verify_eq_strong_gr(&AbstractContext::trivial(&algebra("F1", f)?))?.1)));
    jobs.push(Job::new("eq-strong-gr", "F1M2", |f| {
        let m = fixture("F1M2", f)?.context().cloned().expect("context fixture");
        Ok(verify_eq_strong_gr(&m)?.1)
    }));
    jobs.push(Job::new("eq-strong-gr", "F2", |f| {
        expect_error("eq-strong-gr", "F2 is not strongly graded", verify_eq_strong_gr(&AbstractContext::trivial(&algebra("F2", f)?)), |e| {
            matches!(e, Error::PreconditionFailed(_))
        })
    }));
    jobs.push(Job::new("moritaE", "F1", |f| Ok(smash_context(&AbstractContext::trivial(&algebra("F1", f)?))?.report)));
    jobs.push(Job::new("moritaE", "F2", |f| {
        let ctx = verify_geq_smash(&algebra("F2", f)?)?.context.to_abstract()?;
        Ok(smash_context(&ctx)?.report)
    }));
    jobs.push(Job::new("hierarchy", "separating witnesses", |f| {
        let mut r = VerificationReport::new("hierarchy", "");
        let (f1, f4, sf3, f2) = (algebra("F1", f)?, algebra("F4", f)?, algebra("SF3", f)?, algebra("F2", f)?);
        r.holds("F1 strongly graded", f1.is_strongly_graded());
        r.holds("F4 strongly graded", f4.is_strongly_graded());
        r.holds("SF3 psg but not strongly graded", sf3.is_partially_strongly_graded() && !sf3.is_strongly_graded());
        r.holds("F2 idempotent but not psg", f2.is_idempotent_graded() && !f2.is_partially_strongly_graded());
        Ok(r)
    }));
    jobs.push(Job::new("sgchar", "F1/SF6", |f| {
        let mut r = VerificationReport::new("sgchar", "");
        let (f1, sf6) = (algebra("F1", f)?, algebra("SF6", f)?);
        r.holds("F1: I^B is beta-invariant and F1 is strongly graded", crate::smash::partial_smash_is_invariant(&f1) && f1.is_strongly_graded());
        r.holds("SF6: I^B is not beta-invariant and SF6 is not strongly graded", !crate::smash::partial_smash_is_invariant(&sf6) && !sf6.is_strongly_graded());
        Ok(r)
    }));
    jobs
}

fn seed_jobs(seeds: u64) -> Vec<Job> {
    let mut jobs = Vec::new();
    for seed in 0..seeds {
        let g = seed_group(seed);
        let tag = format!("seed {seed} |G|={}", g.order());
        let gg = g.clone();
        jobs.push(Job::new("hierarchy", tag.clone(), move |f| {
            Ok(hierarchy_report(&fixtures::random_graded_algebra(seed, &gg, Bounds::default(), f)))
        }));
        let gg = g.clone();
        jobs.push(Job::new("duality", tag.clone(), move |f| {
            verify_duality(&fixtures::random_graded_algebra(seed, &gg, Bounds::default(), f), None)
        }));
        let gg = g.clone();
        jobs.push(Job::new("skew-laws", tag.clone(), move |f| {
            skew_laws_report(&fixtures::random_product_partial_action(seed, &gg, Bounds::default(), f).0)
        }));
        let gg = g.clone();
        jobs.push(Job::new("sg", tag.clone(), move |f| Ok(verify_sg(&fixtures::random_psg_algebra(seed, &gg, SMALL, f))?.report)));
        let gg = g.clone();
        jobs.push(Job::new("geq", tag.clone(), move |f| {
            let b = fixtures::random_graded_algebra(seed, &gg, SMALL, f);
            if b.is_idempotent_graded() {
                Ok(verify_geq_smash(&b)?.report)
            } else {
                expect_error("geq", "not idempotent", verify_geq_smash(&b), |e| matches!(e, Error::PreconditionFailed(_)))
            }
        }));
        let gg = g.clone();
        jobs.push(Job::new("round-trip", tag.clone(), move |f| round_trip_report(&fixtures::random_context(seed, &gg, Bounds::default(), f))));
        let gg = g.clone();
        jobs.push(Job::new("composition", tag, move |f| {
            let (m, n) = fixtures::random_composable_pair(seed, &gg, Bounds::default(), f);
            composition_report(&m, &n)
        }));
    }
    jobs
}

pub fn jobs(seeds: u64) -> Vec<Job> {
    let mut j = fixture_jobs();
    j.extend(seed_jobs(seeds));
    j
}

/// Runs every job over `field`; the output order is the job order whatever the scheduling.
pub fn run(seeds: u64, field: Field) -> Vec<VerificationReport> {
    jobs(seeds).par_iter().map(|j| j.run(field)).collect()
}
