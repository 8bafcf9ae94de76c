//! Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Signed;
use rand::seq::index::sample;
use rand::Rng;
use rayon::prelude::*;

use orbitmult::branching::{
    branching_multiplicity, compare_n_m, fock_character_check, fock_degree_dimension,
    tensor_with_dual_sym, AlphaSign, FockModel, SignMatched, Standard,
};
use orbitmult::cg_solver::{cg_multiplicity, solver, two_level_form, Multiplicity, SolverPath};
use orbitmult::oracle::random::{complex_normal, random_complex_vector, random_unitary, unit_phase};
use orbitmult::oracle::{randomized_search, rng_for, verify_membership, OracleConfig};
use orbitmult::orbit_space::{
    coadjoint_action, generic_orbit_invariant, ComplexVector, GroupElement, LinearForm,
};
use orbitmult::rational::int;
use orbitmult::weights::{dominant_in_box, weyl_dimension, DominantWeight};

const SEED: u64 = 20240601;

struct Outcome {
    pass: bool,
    detail: String,
    notes: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
            notes: Vec::new(),
        }
    }

    fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }
}

fn w(v: &[i64]) -> DominantWeight {
    DominantWeight::new(v.to_vec()).unwrap()
}

fn alphas() -> [i64; 4] {
    [1, -1, 2, -2]
}

/// `(λ, μ)` for `n ∈ {2,3}`, entries in `[−3,3]`.
fn small_range() -> Vec<(DominantWeight, DominantWeight)> {
    let mut out = Vec::new();
    for n in 2..=3 {
        let box_ = dominant_in_box(n, -3, 3);
        for l in &box_ {
            for m in &box_ {
                out.push((l.clone(), m.clone()));
            }
        }
    }
    out
}

fn strongly_dominant<R: Rng>(rng: &mut R, n: usize, bound: i64) -> DominantWeight {
    let width = (2 * bound + 1) as usize;
    let mut v: Vec<i64> = sample(rng, width, n).into_iter().map(|i| i as i64 - bound).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    w(&v)
}

fn criterion_1() -> Outcome {
    let mut rng = rng_for(SEED, 1);
    let mut cases = 0;
    let mut failures: BTreeMap<&str, usize> = BTreeMap::new();
    let mut example = None;
    for _ in 0..100 {
        let n = rng.random_range(2..=5);
        let lambda = strongly_dominant(&mut rng, n, 20);
        let alpha = int(alphas()[rng.random_range(0..4)]);
        let sign = AlphaSign::of(&alpha).unwrap();
        for k in 0..=10i64 {
            let mut mu = lambda.entries().to_vec();
            mu[n - 1] -= k;
            let mu = w(&mu);
            cases += 1;
            let cg = cg_multiplicity(&lambda, &alpha, &mu).unwrap();
            let m = branching_multiplicity(&lambda, &mu, sign, &Standard).unwrap().m;
            if cg.multiplicity != Multiplicity::Finite(1) || m != 1 {
                let key = if alpha.is_positive() { "alpha>0" } else { "alpha<0" };
                *failures.entry(key).or_default() += 1;
                example.get_or_insert_with(|| {
                    format!(
                        "lambda={lambda} alpha={alpha} mu={mu}: n={} m={m} ({})",
                        cg.multiplicity, cg.diagnostics
                    )
                });
            }
        }
    }
    let bad: usize = failures.values().sum();
    let mut out = Outcome::new(bad == 0, format!("{} of {cases} cases with n = m = 1", cases - bad));
    for (k, v) in &failures {
        out = out.note(format!("{v} failures with {k}"));
    }
    if let Some(e) = example {
        out = out.note(format!("first failure: {e}"));
    }
    out
}

/// Violations of `m ≠ 0 ⇒ n ≠ 0` per sign of `α`.
fn implication_violations(model: &dyn FockModel) -> BTreeMap<i64, usize> {
    let range = small_range();
    alphas()
        .into_par_iter()
        .map(|a| {
            let alpha = int(a);
            let sign = AlphaSign::of(&alpha).unwrap();
            let bad = range
                .iter()
                .filter(|(l, m)| {
                    branching_multiplicity(l, m, sign, model).unwrap().m != 0
                        && cg_multiplicity(l, &alpha, m).unwrap().multiplicity.is_zero()
                })
                .count();
            (a, bad)
        })
        .collect()
}

fn criterion_2() -> Outcome {
    let per_alpha = implication_violations(&Standard);
    let total: usize = per_alpha.values().sum();
    let cases = small_range().len() * alphas().len();
    let mut out = Outcome::new(total == 0, format!("{total} violations in {cases} cases"));
    for (a, v) in &per_alpha {
        out = out.note(format!("alpha={a}: {v} violations"));
    }
    let sm: usize = implication_violations(&SignMatched).values().sum();
    out.note(format!("sign-matched convention: {sm} violations"))
        .note("e.g. lambda=(1,0) alpha=1 mu=(1,-1): m=1, but alpha>0 cannot lower an eigenvalue")
}

fn criterion_3() -> Outcome {
    let (l, m) = (w(&[-1, -1]), w(&[0, -1]));
    let rows = compare_n_m(&l, &int(1), &[m], &Standard).unwrap();
    let r = &rows[0];
    Outcome::new(
        r.n == Multiplicity::Finite(1) && r.m == 0,
        format!("n={} m={}", r.n, r.m),
    )
}

fn criterion_4() -> Outcome {
    let linear = solver("linear-system").unwrap();
    let lagrange = solver("lagrange").unwrap();
    let mut cases = 0usize;
    let mut disagreements = 0usize;
    let mut over_one = 0usize;
    for n in 2..=3 {
        let box_ = dominant_in_box(n, -4, 4);
        for l in box_.iter().filter(|l| l.is_strongly_dominant()) {
            for m in &box_ {
                for a in alphas() {
                    let alpha = int(a);
                    let r = cg_multiplicity(l, &alpha, m).unwrap();
                    if r.path != SolverPath::StronglyDominantSystem {
                        continue;
                    }
                    cases += 1;
                    if matches!(r.multiplicity, Multiplicity::Finite(k) if k > 1)
                        || r.multiplicity == Multiplicity::Infinite
                    {
                        over_one += 1;
                    }
                    let b = linear.solve(l, m, &alpha).unwrap();
                    let g = lagrange.solve(l, m, &alpha).unwrap();
                    if b != g || b.is_none() {
                        disagreements += 1;
                    }
                }
            }
        }
    }
    Outcome::new(
        cases > 0 && disagreements == 0 && over_one == 0,
        format!("{cases} cases with det B != 0: {disagreements} disagreements, {over_one} with n > 1"),
    )
}

fn criterion_5() -> Outcome {
    let lambda = w(&[0, 0, 0]);
    let alpha = int(2);
    let cfg = OracleConfig::default();
    let mut wrong = Vec::new();
    let mut confirmed = 0;
    let mut unconfirmed = 0;
    let mus: Vec<DominantWeight> = dominant_in_box(3, -6, 6)
        .into_iter()
        .filter(|m| *m != lambda)
        .collect();
    for m in &mus {
        let r = cg_multiplicity(&lambda, &alpha, m).unwrap();
        let e = m.entries();
        let expected = e[1] == 0 && e[2] == 0 && e[0] > 0;
        if r.multiplicity.is_zero() == expected {
            wrong.push(m.to_string());
        }
        if let Some(z) = &r.witness {
            if verify_membership(&lambda, 2.0, &z.to_vector(), m, &cfg).unwrap() {
                confirmed += 1;
            } else {
                unconfirmed += 1;
            }
        }
    }
    let special = w(&[5, 5, 0]);
    let n_special = cg_multiplicity(&lambda, &alpha, &special).unwrap().multiplicity;
    let form = two_level_form(&lambda, &alpha, &special).unwrap();
    let flagged = compare_n_m(&lambda, &alpha, &[special], &Standard).unwrap()[0].scalar_form_flag;
    let pass = wrong.is_empty() && n_special.is_zero() && form && flagged && unconfirmed == 0;
    Outcome::new(
        pass,
        format!(
            "{} mu != lambda scanned, {} misclassified; (5,5,0): n={n_special}, two-level form={form}, flagged={flagged}; witnesses confirmed {confirmed}/{}",
            mus.len(),
            wrong.len(),
            confirmed + unconfirmed
        ),
    )
    .note("mu = lambda = (0,0,0) is outside the statement (mu != lambda) and has n=1 with z=0")
}

fn criterion_6() -> Outcome {
    let mut rng = rng_for(SEED, 6);
    let mut checks = 0;
    let mut bad = Vec::new();
    for _ in 0..50 {
        let n = rng.random_range(1..=4);
        let mut v: Vec<i64> = (0..n).map(|_| rng.random_range(-3..=3)).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        let l = w(&v);
        for k in 0..=6u64 {
            checks += 1;
            let lhs: BigInt = tensor_with_dual_sym(&l, k).iter().map(weyl_dimension).sum();
            let rhs = weyl_dimension(&l) * fock_degree_dimension(n, k);
            if lhs != rhs {
                bad.push(format!("{l} k={k}: {lhs} != {rhs}"));
            }
        }
    }
    let mut out = Outcome::new(bad.is_empty(), format!("{} of {checks} identities exact", checks - bad.len()));
    if let Some(b) = bad.first() {
        out = out.note(b.clone());
    }
    out
}

fn criterion_7() -> Outcome {
    let mut rng = rng_for(SEED, 7);
    let mut worst: f64 = 0.0;
    let mut checks = 0;
    let mut errors = 0;
    for _ in 0..100 {
        let n = rng.random_range(1..=4);
        let theta: Vec<f64> = (0..n).map(|_| unit_phase(&mut rng).arg()).collect();
        for k in 0..=5 {
            checks += 1;
            match fock_character_check(n, k, &theta) {
                Ok((h, chi)) => worst = worst.max((h - chi).norm()),
                Err(_) => errors += 1,
            }
        }
    }
    Outcome::new(
        worst <= 1e-8 && errors == 0,
        format!("{checks} checks, max |h_k - char| = {worst:.2e}, {errors} errors"),
    )
}

fn criterion_8() -> Outcome {
    let mut rng = rng_for(SEED, 8);
    let lambda = w(&[3, 1]);
    let phi = LinearForm::generic(&lambda, 2.0);
    let mut worst: f64 = 0.0;
    let mut x_exact = true;
    for _ in 0..1000 {
        let g = GroupElement::new(
            random_unitary(&mut rng, 2),
            ComplexVector(random_complex_vector(&mut rng, 2, 2.0)),
            complex_normal(&mut rng).re,
        )
        .unwrap();
        let image = coadjoint_action(&g, &phi).unwrap();
        let (spec, x) = generic_orbit_invariant(&image).unwrap();
        worst = worst.max((spec[0] - 3.0).abs()).max((spec[1] - 1.0).abs());
        x_exact &= x == 2.0 && image.x == 2.0;
    }
    Outcome::new(
        worst <= 1e-8 && x_exact,
        format!("1000 elements, max spectral deviation {worst:.2e}, x exact: {x_exact}"),
    )
}

fn criterion_9() -> Outcome {
    let cases: Vec<(DominantWeight, i64, DominantWeight)> = small_range()
        .into_iter()
        .flat_map(|(l, m)| alphas().into_iter().map(move |a| (l.clone(), a, m.clone())))
        .collect();
    let cfg = OracleConfig {
        tol: 1e-6,
        seed: SEED,
        ..OracleConfig::default()
    };
    let disagreements: Vec<String> = cases
        .par_iter()
        .enumerate()
        .filter_map(|(i, (l, a, m))| {
            let exact = cg_multiplicity(l, &int(*a), m).unwrap().multiplicity;
            let found = randomized_search(l, *a as f64, m, 200_000, &cfg.with_stream(i as u64))
                .unwrap()
                .is_some();
            (found != (exact == Multiplicity::Finite(1)))
                .then(|| format!("lambda={l} alpha={a} mu={m}: exact n={exact}, search found={found}"))
        })
        .collect();
    let mut out = Outcome::new(
        disagreements.is_empty(),
        format!("{} cases, {} disagreements", cases.len(), disagreements.len()),
    );
    for d in disagreements.iter().take(5) {
        out = out.note(d.clone());
    }
    out
}

type Criterion = (u32, &'static str, fn() -> Outcome, Duration);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "strip of the last entry: n = m = 1", criterion_1, Duration::from_secs(5)),
        (2, "m != 0 implies n != 0 (standard convention)", criterion_2, Duration::from_secs(60)),
        (3, "converse failure at lambda=(-1,-1), alpha=1, mu=(0,-1)", criterion_3, Duration::MAX),
        (4, "n <= 1 and solver agreement when det B != 0", criterion_4, Duration::MAX),
        (5, "scalar lambda=(0,0,0), alpha=2: corrected two-level form", criterion_5, Duration::MAX),
        (6, "Pieri dimension identity", criterion_6, Duration::MAX),
        (7, "Fock character identity", criterion_7, Duration::MAX),
        (8, "generic orbit invariance", criterion_8, Duration::MAX),
        (9, "randomized search finds z iff n = 1", criterion_9, Duration::from_secs(600)),
    ];
    let mut failed = 0;
    for (id, name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed < limit;
        let pass = outcome.pass && in_time;
        failed += usize::from(!pass);
        let timing = if limit == Duration::MAX {
            format!("{:.2}s", elapsed.as_secs_f64())
        } else {
            format!("{:.2}s, limit {}s", elapsed.as_secs_f64(), limit.as_secs())
        };
        println!(
            "{} criterion {id}: {name}: {} [{timing}]",
            if pass { "PASS" } else { "FAIL" },
            outcome.detail
        );
        for note in &outcome.notes {
            println!("    {note}");
        }
        if !in_time {
            println!("    over the time limit");
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
