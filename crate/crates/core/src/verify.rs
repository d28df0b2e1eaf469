//! Exhaustive agreement checks between the independent constructions.
//!
//! Reports are rendered without timings so that identical runs print
//! identical text.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::diagrams::{
    canonical_diagram, is_poptotic, ladder_closure, m_of_w, transposed_chain, unique_closure_predicate,
    DiagramSet,
};
use crate::error::{check_rank, Error, Result};
use crate::genpoly::{extended_ladder_closure, extended_weight_monomial, tau_involution, verify_mitosis_recursion};
use crate::pathmodel::{rsp_all, w_of_diagram};
use crate::polytope::{
    demazure_dimension, face_of_diagram, string_polytope, union_face_lattice_points, Weight,
    DEFAULT_POINT_CAP,
};
use crate::weyl::{k_min, reduced_words_up_to, SignedPermutation};

/// Seed for the rank-5 samples.
pub const SAMPLE_SEED: u64 = 0x5eed_0005;
/// Number of Weyl group elements sampled at rank 5.
pub const SAMPLE_SIZE: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Thm1,
    Thm2,
    Lemmas,
    Polytope,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Lemmas => "lemmas",
            Suite::Polytope => "polytope",
            Suite::All => "all",
        }
    }

    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Thm1, Suite::Thm2, Suite::Lemmas, Suite::Polytope],
            s => vec![s],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "thm1" => Suite::Thm1,
            "thm2" => Suite::Thm2,
            "lemmas" => Suite::Lemmas,
            "polytope" => Suite::Polytope,
            "all" => Suite::All,
            other => return Err(Error::Parse(format!("unknown suite {other:?}"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    Fast,
    Full,
}

impl Profile {
    pub fn name(self) -> &'static str {
        match self {
            Profile::Fast => "fast",
            Profile::Full => "full",
        }
    }

    /// Largest rank checked exhaustively.
    pub fn max_rank(self) -> usize {
        match self {
            Profile::Fast => 3,
            Profile::Full => 4,
        }
    }
}

impl FromStr for Profile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Profile::Fast),
            "full" => Ok(Profile::Full),
            other => Err(Error::Parse(format!("unknown profile {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub case: String,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n: usize,
    /// Top-level cases (Weyl group elements, `(w, j)` pairs, weights).
    pub cases: usize,
    /// Individual comparisons made.
    pub checks: usize,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub n: usize,
    pub profile: Profile,
    pub sampled: bool,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.failures.is_empty())
    }

    pub fn failure_count(&self) -> usize {
        self.suites.iter().map(|s| s.failures.len()).sum()
    }

    pub fn elapsed(&self) -> Duration {
        self.suites.iter().map(|s| s.elapsed).sum()
    }
}

/// Deterministic text; timings are left out.
impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = if self.sampled { " sampled" } else { "" };
        for s in &self.suites {
            writeln!(
                f,
                "suite {} n={} profile={}{}: cases={} checks={} failures={}",
                s.suite.name(),
                s.n,
                self.profile.name(),
                mode,
                s.cases,
                s.checks,
                s.failures.len()
            )?;
            for fail in &s.failures {
                writeln!(f, "  FAIL {}: {}", fail.case, fail.detail)?;
            }
        }
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status}: {} failures", self.failure_count())
    }
}

/// Elements under test: all of `W`, or a fixed sample at rank 5.
fn elements(n: usize, sampled: bool) -> Result<Vec<SignedPermutation>> {
    let all = SignedPermutation::all(n)?;
    if !sampled {
        return Ok(all);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mut pick: Vec<SignedPermutation> = all.choose_multiple(&mut rng, SAMPLE_SIZE).cloned().collect();
    pick.push(SignedPermutation::identity(n));
    pick.push(SignedPermutation::longest(n));
    pick.sort();
    pick.dedup();
    Ok(pick)
}

fn show(set: &DiagramSet) -> String {
    let v: Vec<Vec<(usize, usize)>> = set.iter().map(|d| d.cells_row_major()).collect();
    format!("{v:?}")
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<Failure>,
}

impl Tally {
    fn check(&mut self, ok: bool, case: impl FnOnce() -> String, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure {
                case: case(),
                detail: detail(),
            });
        }
    }

    fn merge(parts: Vec<Tally>) -> Tally {
        let mut t = Tally::default();
        for p in parts {
            t.checks += p.checks;
            t.failures.extend(p.failures);
        }
        t
    }
}

/// Reduced diagrams found by brute force agree with ladder closures of `D(w)`.
fn thm1(n: usize, ws: &[SignedPermutation], sampled: bool) -> Result<Tally> {
    let buckets = rsp_all(n, sampled)?;
    let parts: Vec<Tally> = ws
        .par_iter()
        .map(|w| {
            let mut t = Tally::default();
            let closure = ladder_closure(&canonical_diagram(w));
            let brute = buckets.get(w).cloned().unwrap_or_default();
            t.check(
                brute == closure,
                || format!("w={w}"),
                || format!("RSP = {} but closure = {}", show(&brute), show(&closure)),
            );
            let traced = w_of_diagram(&canonical_diagram(w));
            t.check(
                traced.as_ref() == Ok(w),
                || format!("w={w}"),
                || format!("D(w) traces to {traced:?}"),
            );
            t
        })
        .collect();
    let mut t = Tally::merge(parts);
    let total: usize = buckets.values().map(|s| s.len()).sum();
    let covered: usize = ws.iter().map(|w| buckets.get(w).map_or(0, |s| s.len())).sum();
    if !sampled {
        t.check(
            total == covered,
            || "partition".into(),
            || format!("{total} reduced diagrams but {covered} attributed"),
        );
    }
    Ok(t)
}

/// Mitosis chains along reduced words agree with the ladder closure.
fn thm2(n: usize, ws: &[SignedPermutation], profile: Profile, sampled: bool) -> Result<Tally> {
    let per_word = if profile == Profile::Full && n <= 3 && !sampled {
        usize::MAX
    } else {
        3
    };
    let parts: Vec<Result<Tally>> = ws
        .par_iter()
        .map(|w| {
            let mut t = Tally::default();
            let closure = ladder_closure(&canonical_diagram(w));
            let m = m_of_w(w);
            t.check(
                m == closure,
                || format!("w={w}"),
                || format!("M(w) = {} but closure = {}", show(&m), show(&closure)),
            );
            let carved = k_min(w).carve(n);
            for word in std::iter::once(carved).chain(reduced_words_up_to(w, per_word)) {
                let chain = transposed_chain(&word, n)?;
                t.check(
                    chain == closure,
                    || format!("w={w} word={word}"),
                    || format!("transposed chain = {} but closure = {}", show(&chain), show(&closure)),
                );
            }
            Ok(t)
        })
        .collect();
    Ok(Tally::merge(parts.into_iter().collect::<Result<_>>()?))
}

/// Generating-function identities, the involution, the single-diagram
/// criterion and poptotic sequences.
fn lemmas(n: usize, ws: &[SignedPermutation]) -> Result<Tally> {
    let parts: Vec<Result<Tally>> = ws
        .par_iter()
        .map(|w| {
            let mut t = Tally::default();
            for j in 1..=n {
                if w.mul_simple_right(j).length() > w.length() {
                    let r = verify_mitosis_recursion(w, j)?;
                    t.check(r.passed(), || format!("w={w} j={j}"), || r.failures.join("; "));
                }
                let closure = extended_ladder_closure(&canonical_diagram(w), j)?;
                let mut bad = None;
                for e in &closure {
                    let ok = match tau_involution(e) {
                        Ok(te) => {
                            tau_involution(&te).ok() == Some(*e)
                                && extended_weight_monomial(&te) == extended_weight_monomial(e).swap_xy()
                                && closure.binary_search(&te).is_ok()
                        }
                        Err(_) => false,
                    };
                    if !ok {
                        bad = Some(*e);
                        break;
                    }
                }
                t.check(
                    bad.is_none(),
                    || format!("tau w={w} j={j}"),
                    || format!("fails on {bad:?}"),
                );
            }
            let single = ladder_closure(&canonical_diagram(w)).len() == 1;
            t.check(
                unique_closure_predicate(w) == single,
                || format!("unique closure w={w}"),
                || format!("predicate disagrees with closure size (single = {single})"),
            );
            let carved = k_min(w).carve(n);
            let pop = is_poptotic(&carved, n)?;
            t.check(pop, || format!("poptotic w={w}"), || format!("{carved} is not poptotic"));
            Ok(t)
        })
        .collect();
    Ok(Tally::merge(parts.into_iter().collect::<Result<_>>()?))
}

fn weights(n: usize, sampled: bool) -> Vec<Weight> {
    let mut out: Vec<Weight> = (1..=n).map(|i| Weight::fundamental(i, n)).collect();
    if !sampled {
        out.push(Weight::rho(n));
    }
    out
}

/// Lattice-point counts of face unions against Demazure dimensions.
fn polytope(n: usize, ws: &[SignedPermutation], sampled: bool, lambdas: &[Weight]) -> Result<Tally> {
    let mut t = Tally::default();
    let w0 = SignedPermutation::longest(n);
    for lam in lambdas {
        let total = string_polytope(lam)?.lattice_points(DEFAULT_POINT_CAP)?.len() as i64;
        let expect = demazure_dimension(&w0, lam)?;
        t.check(
            total == expect,
            || format!("lambda={lam}"),
            || format!("{total} lattice points, Demazure dimension {expect}"),
        );
        let parts: Vec<Result<Tally>> = ws
            .par_iter()
            .map(|w| {
                let mut t = Tally::default();
                let got = union_face_lattice_points(w, lam)? as i64;
                let expect = demazure_dimension(w, lam)?;
                t.check(
                    got == expect,
                    || format!("lambda={lam} w={w}"),
                    || format!("face union has {got} points, Demazure dimension {expect}"),
                );
                Ok(t)
            })
            .collect();
        let sub = Tally::merge(parts.into_iter().collect::<Result<_>>()?);
        t.checks += sub.checks;
        t.failures.extend(sub.failures);
    }
    if !sampled && lambdas.contains(&Weight::rho(n)) {
        let rho = Weight::rho(n);
        let parts: Vec<Result<Tally>> = ws
            .par_iter()
            .map(|w| {
                let mut t = Tally::default();
                for d in m_of_w(w) {
                    let dim = face_of_diagram(&d, &rho)?.lattice_dimension(DEFAULT_POINT_CAP)?;
                    t.check(
                        dim == w.length() as isize,
                        || format!("face w={w} D={:?}", d.cells_row_major()),
                        || format!("dimension {dim}, length {}", w.length()),
                    );
                }
                Ok(t)
            })
            .collect();
        let sub = Tally::merge(parts.into_iter().collect::<Result<_>>()?);
        t.checks += sub.checks;
        t.failures.extend(sub.failures);
    }
    Ok(t)
}

/// Runs `suite` at rank `n`.
///
/// The fast profile covers `n ≤ 3`, the full profile `n ≤ 4`; rank 5 runs on
/// a fixed sample of Weyl group elements under the full profile.
pub fn run(suite: Suite, n: usize, profile: Profile) -> Result<VerifyReport> {
    run_with_weights(suite, n, profile, None)
}

/// As [`run`], with the polytope suite restricted to `lambdas` when given.
///
/// Face dimensions are only checked when `ρ` is among the weights.
pub fn run_with_weights(
    suite: Suite,
    n: usize,
    profile: Profile,
    lambdas: Option<Vec<Weight>>,
) -> Result<VerifyReport> {
    check_rank(n)?;
    if let Some(lams) = &lambdas {
        for lam in lams {
            if lam.rank() != n {
                return Err(Error::RankMismatch { left: n, right: lam.rank() });
            }
            lam.check_dominant()?;
        }
    }
    let sampled = n > profile.max_rank();
    if sampled && (profile != Profile::Full || n > 5) {
        return Err(Error::RankGuard {
            what: "verification",
            n,
            max: if profile == Profile::Full { 5 } else { profile.max_rank() },
        });
    }
    let ws = elements(n, sampled)?;
    let lambdas = lambdas.unwrap_or_else(|| weights(n, sampled));
    let mut suites = Vec::new();
    for part in suite.parts() {
        let start = Instant::now();
        let (cases, tally) = match part {
            Suite::Thm1 => (ws.len(), thm1(n, &ws, sampled)?),
            Suite::Thm2 => (ws.len(), thm2(n, &ws, profile, sampled)?),
            Suite::Lemmas => {
                let pairs = ws.iter().map(|w| (1..=n).filter(|&j| w.mul_simple_right(j).length() > w.length()).count()).sum();
                (pairs, lemmas(n, &ws)?)
            }
            Suite::Polytope => (lambdas.len(), polytope(n, &ws, sampled, &lambdas)?),
            Suite::All => unreachable!("expanded above"),
        };
        suites.push(SuiteReport {
            suite: part,
            n,
            cases,
            checks: tally.checks,
            failures: tally.failures,
            elapsed: start.elapsed(),
        });
    }
    Ok(VerifyReport {
        n,
        profile,
        sampled,
        suites,
    })
}
