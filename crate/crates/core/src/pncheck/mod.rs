//! Trajectory certificates for words acting on points.
//!
//! For a reduced word `w = y_1 ⋯ y_n`, a point `ω` and a tuple `ḡ`, the trajectory
//! is `ω·w_0(ḡ), ω·w_1(ḡ), ..., ω·w_n(ḡ)` where `w_i = y_1 ⋯ y_i`. A group has
//! property `P_n` on its points when every reduced word of length `n` has some
//! `ω` and `ḡ` whose trajectory has `n + 1` distinct points.
//!
//! Words are only reduced up to renaming and inverting variables. If `w'` arises
//! from `w` by renaming, the tuple permuted the same way gives `w'` the same
//! partial-word values; if `w'` arises by inverting `x_j`, replacing `g_j` with
//! `g_j⁻¹` does the same. Either way the trajectory is unchanged point by point, so
//! one representative per class suffices. Cyclic rotation has no such
//! substitution, and trajectories of rotated words differ.
//!
//! # Sylow search
//!
//! In `sylow2` mode every tuple entry must lie in one Sylow 2-subgroup. Fixing one
//! Sylow subgroup `P`, a certificate for `(P^x, ω)` with tuple `ḡ^x` is the same as a
//! certificate for `(P, ω·x⁻¹)` with tuple `ḡ`. For a fixed target `ω` the search
//! therefore walks the points `τ` of the orbit of `ω` (starting at `ω`) and tries
//! the conjugate `P^x` with `τ·x = ω`. Once every `τ` is exhausted no Sylow
//! 2-subgroup at all carries a certificate for `ω`.

mod cert;

pub use cert::{validate_certificate, PnCertificate};

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::freeword::{enumerate_words, FreeWord, Letter, Symmetry};
use crate::grpstruct::nonsolvable_length;
use crate::laws::{
    non_law_witness, LawStatus, NonLawReport, Phase, TheoremStatus, DEFAULT_BUDGET,
};
use crate::permgroup::{PermGroup, Permutation};

/// Random tuples tried before the systematic search.
pub const DEFAULT_PROBES: u64 = 200;

/// `[ω·w_0(ḡ), ..., ω·w_n(ḡ)]`, one letter per step.
pub fn trajectory(g: &PermGroup, omega: usize, w: &FreeWord, tuple: &[Permutation]) -> Result<Vec<usize>> {
    if omega >= g.degree() {
        return Err(Error::PointOutOfRange {
            point: omega,
            degree: g.degree(),
        });
    }
    if tuple.len() < w.num_vars() {
        return Err(Error::TupleTooShort {
            needed: w.num_vars(),
            found: tuple.len(),
        });
    }
    for x in tuple {
        if !g.contains(x)? {
            return Err(Error::NotInGroup);
        }
    }
    Ok(walk(omega, w.letters(), tuple))
}

fn walk(omega: usize, letters: &[Letter], tuple: &[Permutation]) -> Vec<usize> {
    let inverses: Vec<Permutation> = tuple.iter().map(|x| x.inverse()).collect();
    let mut point = omega;
    let mut out = Vec::with_capacity(letters.len() + 1);
    out.push(point);
    for l in letters {
        let g = if l.is_inverse() { &inverses[l.slot()] } else { &tuple[l.slot()] };
        point = g.apply(point);
        out.push(point);
    }
    out
}

fn all_distinct(points: &[usize]) -> bool {
    (1..points.len()).all(|i| !points[..i].contains(&points[i]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    /// Tuples over the whole group.
    Any,
    /// Tuples inside a single Sylow 2-subgroup.
    Sylow2,
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchMode::Any => "any",
            SearchMode::Sylow2 => "sylow2",
        })
    }
}

#[derive(Clone, Debug)]
pub struct SearchRequest {
    pub word: FreeWord,
    pub mode: SearchMode,
    /// Fixed base point; otherwise any point of `points` may serve.
    pub omega: Option<usize>,
    /// Restriction of the candidate base points (for example one orbit).
    pub points: Option<Vec<usize>>,
    pub seed: u64,
    pub probes: u64,
}

impl SearchRequest {
    pub fn new(word: FreeWord, mode: SearchMode) -> SearchRequest {
        SearchRequest {
            word,
            mode,
            omega: None,
            points: None,
            seed: crate::laws::DEFAULT_SEED,
            probes: DEFAULT_PROBES,
        }
    }

    pub fn at(mut self, omega: usize) -> SearchRequest {
        self.omega = Some(omega);
        self
    }

    pub fn seed(mut self, seed: u64) -> SearchRequest {
        self.seed = seed;
        self
    }
}

#[derive(Clone, Debug)]
pub enum SearchOutcome {
    Found(Box<PnCertificate>),
    /// The whole search space was scanned without success.
    Exhausted { tuples_checked: u128 },
    /// A cap or budget stopped the search early.
    BudgetExhausted { tuples_checked: u128, reason: String },
}

impl SearchOutcome {
    pub fn certificate(&self) -> Option<&PnCertificate> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            _ => None,
        }
    }
}

/// Backtracking over tuples, assigning each variable at its first occurrence and
/// abandoning a branch as soon as a trajectory point repeats.
struct Backtrack<'a> {
    letters: &'a [Letter],
    elements: &'a [Permutation],
    inverses: Vec<Permutation>,
    assigned: Vec<Option<usize>>,
    trail: Vec<usize>,
    nodes: u128,
}

impl<'a> Backtrack<'a> {
    fn new(w: &'a FreeWord, elements: &'a [Permutation]) -> Self {
        Backtrack {
            letters: w.letters(),
            elements,
            inverses: elements.iter().map(|x| x.inverse()).collect(),
            assigned: vec![None; w.num_vars()],
            trail: Vec::new(),
            nodes: 0,
        }
    }

    fn search(&mut self, omega: usize) -> Option<Vec<usize>> {
        self.assigned.iter_mut().for_each(|a| *a = None);
        self.trail = vec![omega];
        self.step(0).then(|| self.assigned.iter().map(|a| a.unwrap_or(0)).collect())
    }

    fn image(&self, letter: Letter, e: usize, point: usize) -> usize {
        if letter.is_inverse() {
            self.inverses[e].apply(point)
        } else {
            self.elements[e].apply(point)
        }
    }

    fn step(&mut self, i: usize) -> bool {
        if i == self.letters.len() {
            return true;
        }
        let letter = self.letters[i];
        let point = *self.trail.last().unwrap();
        if let Some(e) = self.assigned[letter.slot()] {
            self.nodes += 1;
            let next = self.image(letter, e, point);
            if self.trail.contains(&next) {
                return false;
            }
            self.trail.push(next);
            let ok = self.step(i + 1);
            if !ok {
                self.trail.pop();
            }
            return ok;
        }
        for e in 0..self.elements.len() {
            self.nodes += 1;
            let next = self.image(letter, e, point);
            if self.trail.contains(&next) {
                continue;
            }
            self.assigned[letter.slot()] = Some(e);
            self.trail.push(next);
            if self.step(i + 1) {
                return true;
            }
            self.trail.pop();
        }
        self.assigned[letter.slot()] = None;
        false
    }
}

/// Elements `g` with `root·g = β`, indexed by `β`, for the orbit of `root`.
fn orbit_transversal(g: &PermGroup, root: usize) -> Vec<Option<Permutation>> {
    let mut t: Vec<Option<Permutation>> = vec![None; g.degree()];
    t[root] = Some(g.identity());
    let mut queue = vec![root];
    let mut head = 0;
    while head < queue.len() {
        let b = queue[head];
        head += 1;
        for s in g.generators() {
            let c = s.apply(b);
            if t[c].is_none() {
                t[c] = Some(t[b].as_ref().unwrap().mul(s));
                queue.push(c);
            }
        }
    }
    t
}

fn certificate(
    req: &SearchRequest,
    omega: usize,
    tuple: Vec<Permutation>,
    sylow: Option<&PermGroup>,
    phase: Phase,
) -> SearchOutcome {
    let trajectory = walk(omega, req.word.letters(), &tuple);
    SearchOutcome::Found(Box::new(PnCertificate {
        word: req.word.clone(),
        omega,
        tuple,
        trajectory,
        sylow_witness: sylow.map(|p| p.generators().to_vec()),
        phase,
    }))
}

/// Random probes over `pool`, then backtracking over its element list.
fn search_in(
    pool: &PermGroup,
    req: &SearchRequest,
    points: &[usize],
    probes: u64,
    caps: &Caps,
    sylow: Option<&PermGroup>,
    checked: &mut u128,
) -> Option<SearchOutcome> {
    let k = req.word.num_vars();
    let mut rng = ChaCha8Rng::seed_from_u64(req.seed);
    for _ in 0..probes {
        let tuple: Vec<Permutation> = (0..k).map(|_| pool.random_element(&mut rng)).collect();
        *checked += 1;
        for &omega in points {
            if all_distinct(&walk(omega, req.word.letters(), &tuple)) {
                return Some(certificate(req, omega, tuple, sylow, Phase::Random));
            }
        }
    }
    let elements = match pool.elements(caps.element_cap) {
        Ok(e) => e,
        Err(e) => {
            return Some(SearchOutcome::BudgetExhausted {
                tuples_checked: *checked,
                reason: e.to_string(),
            })
        }
    };
    let mut bt = Backtrack::new(&req.word, &elements);
    for &omega in points {
        let found = bt.search(omega);
        *checked += bt.nodes;
        bt.nodes = 0;
        if let Some(idx) = found {
            let tuple = idx.iter().map(|&i| elements[i].clone()).collect();
            return Some(certificate(req, omega, tuple, sylow, Phase::Systematic));
        }
    }
    None
}

/// Looks for a trajectory certificate for one word.
pub fn pn_certificate_search(g: &PermGroup, req: &SearchRequest, caps: &Caps) -> Result<SearchOutcome> {
    let w = &req.word;
    if !w.is_reduced() {
        return Err(Error::InvalidParameters(format!("word {w} is not reduced")));
    }
    let mut points: Vec<usize> = match &req.points {
        Some(p) => p.clone(),
        None => (0..g.degree()).collect(),
    };
    if let Some(omega) = req.omega {
        if omega >= g.degree() {
            return Err(Error::PointOutOfRange {
                point: omega,
                degree: g.degree(),
            });
        }
        points = vec![omega];
    }
    for &p in &points {
        if p >= g.degree() {
            return Err(Error::PointOutOfRange {
                point: p,
                degree: g.degree(),
            });
        }
    }
    let mut checked = 0u128;
    match req.mode {
        SearchMode::Any => {
            if let Some(out) = search_in(g, req, &points, req.probes, caps, None, &mut checked) {
                return Ok(out);
            }
            Ok(SearchOutcome::Exhausted {
                tuples_checked: checked,
            })
        }
        SearchMode::Sylow2 => {
            let p0 = if g.order().is_multiple_of(2) {
                g.sylow(2, caps)?
            } else {
                PermGroup::trivial(g.degree())
            };
            let Some(omega) = req.omega else {
                // Any base point: conjugating P moves the base point, so P itself suffices.
                if let Some(out) = search_in(&p0, req, &points, req.probes, caps, Some(&p0), &mut checked) {
                    return Ok(out);
                }
                return Ok(SearchOutcome::Exhausted {
                    tuples_checked: checked,
                });
            };
            let transversal = orbit_transversal(g, omega);
            let mut order: Vec<usize> = vec![omega];
            order.extend((0..g.degree()).filter(|&t| t != omega && transversal[t].is_some()));
            for (n, tau) in order.into_iter().enumerate() {
                if n as u128 >= caps.sylow_conj_cap {
                    return Ok(SearchOutcome::BudgetExhausted {
                        tuples_checked: checked,
                        reason: format!("Sylow conjugate cap {} reached", caps.sylow_conj_cap),
                    });
                }
                // x maps tau to omega.
                let x = transversal[tau].as_ref().unwrap().inverse();
                let q = p0.conjugate_by(&x);
                let probes = if n == 0 { req.probes } else { 0 };
                if let Some(out) = search_in(&q, req, &points, probes, caps, Some(&q), &mut checked) {
                    return Ok(out);
                }
            }
            Ok(SearchOutcome::Exhausted {
                tuples_checked: checked,
            })
        }
    }
}

/// Search result for one word.
#[derive(Clone, Debug, Serialize)]
pub struct WordResult {
    pub word: FreeWord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<usize>,
    pub status: TheoremStatus,
    #[serde(skip)]
    pub certificate: Option<PnCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PnReport {
    pub n: usize,
    pub mode: SearchMode,
    pub status: TheoremStatus,
    pub results: Vec<WordResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl PnReport {
    pub fn certificates(&self) -> impl Iterator<Item = &PnCertificate> {
        self.results.iter().filter_map(|r| r.certificate.as_ref())
    }
}

fn word_result(word: &FreeWord, omega: Option<usize>, out: Result<SearchOutcome>) -> WordResult {
    let (status, certificate, note) = match out {
        Ok(SearchOutcome::Found(c)) => (TheoremStatus::Pass, Some(*c), None),
        Ok(SearchOutcome::Exhausted { tuples_checked }) => (
            TheoremStatus::Fail,
            None,
            Some(format!("search space exhausted after {tuples_checked} steps")),
        ),
        Ok(SearchOutcome::BudgetExhausted { reason, .. }) => {
            (TheoremStatus::FailToDecide, None, Some(reason))
        }
        Err(e) => (TheoremStatus::FailToDecide, None, Some(e.to_string())),
    };
    WordResult {
        word: word.clone(),
        omega,
        status,
        certificate,
        note,
    }
}

fn combine(results: &[WordResult]) -> TheoremStatus {
    results
        .iter()
        .fold(TheoremStatus::Pass, |acc, r| acc.and(r.status))
}

/// Property `P_n`: every word of length exactly `n` (up to renaming and inverting
/// variables) has a certificate at some point of `points` (all points by default).
pub fn check_pn(
    g: &PermGroup,
    n: usize,
    mode: SearchMode,
    points: Option<Vec<usize>>,
    caps: &Caps,
    seed: u64,
) -> PnReport {
    let results: Vec<WordResult> = enumerate_words(n, Symmetry::RenameInvert)
        .map(|w| {
            let mut req = SearchRequest::new(w.clone(), mode).seed(seed);
            req.points = points.clone();
            word_result(&w, None, pn_certificate_search(g, &req, caps))
        })
        .collect();
    PnReport {
        n,
        mode,
        status: combine(&results),
        results,
        error: None,
    }
}

/// For every point and every word of length `λ(G)`, a certificate inside a Sylow
/// 2-subgroup. An exhausted pair is a failure.
pub fn verify_theorem_c(g: &PermGroup, caps: &Caps, seed: u64) -> PnReport {
    let undecided = |n, e: String| PnReport {
        n,
        mode: SearchMode::Sylow2,
        status: TheoremStatus::FailToDecide,
        results: Vec::new(),
        error: Some(e),
    };
    let n = match nonsolvable_length(g, caps) {
        Ok(n) => n,
        Err(e) => return undecided(0, e.to_string()),
    };
    if !g.is_transitive() {
        return undecided(n, "group is not transitive on its points".into());
    }
    let words: Vec<FreeWord> = enumerate_words(n, Symmetry::RenameInvert).collect();
    let mut results = Vec::new();
    for omega in 0..g.degree() {
        for w in &words {
            if w.is_empty() {
                continue;
            }
            let req = SearchRequest::new(w.clone(), SearchMode::Sylow2)
                .at(omega)
                .seed(seed);
            results.push(word_result(w, Some(omega), pn_certificate_search(g, &req, caps)));
        }
    }
    PnReport {
        n,
        mode: SearchMode::Sylow2,
        status: combine(&results),
        results,
        error: None,
    }
}

/// Every canonical word of length at most `λ(G)` gets a witness from the
/// randomized search alone; anything else is undecided.
pub fn verify_theorem_b(g: &PermGroup, caps: &Caps, seed: u64) -> NonLawReport {
    let lambda = match nonsolvable_length(g, caps) {
        Ok(l) => l,
        Err(e) => {
            return NonLawReport {
                lambda: 0,
                status: TheoremStatus::FailToDecide,
                words: Vec::new(),
                error: Some(e.to_string()),
            }
        }
    };
    let mut status = TheoremStatus::Pass;
    let mut words = Vec::new();
    for len in 1..=lambda {
        for w in enumerate_words(len, Symmetry::Full) {
            let r = non_law_witness(g, &w, DEFAULT_BUDGET, seed);
            if r.status != LawStatus::NonLawWitness {
                status = status.and(TheoremStatus::FailToDecide);
            }
            words.push(r);
        }
    }
    NonLawReport {
        lambda,
        status,
        words,
        error: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{alternating, cyclic, psl2, symmetric};

    fn w(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    fn p(d: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(d, s).unwrap()
    }

    #[test]
    fn trajectories() {
        let a5 = alternating(5).unwrap();
        let c = p(5, "(0 1 2 3 4)");
        assert_eq!(trajectory(&a5, 0, &w("x1 x2"), &[c.clone(), c.clone()]).unwrap(), [0, 1, 2]);
        assert_eq!(trajectory(&a5, 3, &w("x1"), &[a5.identity()]).unwrap(), [3, 3]);
        assert_eq!(trajectory(&a5, 2, &FreeWord::empty(), &[]).unwrap(), [2]);
        assert!(matches!(
            trajectory(&a5, 5, &w("x1"), std::slice::from_ref(&c)),
            Err(Error::PointOutOfRange { .. })
        ));
        let odd = p(5, "(0 1)");
        assert!(matches!(trajectory(&a5, 0, &w("x1"), &[odd]), Err(Error::NotInGroup)));
        // Inverse letters step backwards.
        assert_eq!(trajectory(&a5, 0, &w("x1^-1 x1^-1"), &[c]).unwrap(), [0, 4, 3]);
    }

    #[test]
    fn sylow_search_moves_to_conjugates() {
        let caps = Caps::default();
        let a5 = alternating(5).unwrap();
        let at = |omega| {
            let req = SearchRequest::new(w("x1"), SearchMode::Sylow2).at(omega);
            let out = pn_certificate_search(&a5, &req, &caps).unwrap();
            let cert = out.certificate().unwrap().clone();
            validate_certificate(&cert, &a5).unwrap();
            cert
        };
        let c0 = at(0);
        let c4 = at(4);
        assert_ne!(c0.trajectory[1], 0);
        assert_ne!(c4.trajectory[1], 4);
        let p0 = PermGroup::new(5, c0.sylow_witness.clone().unwrap()).unwrap();
        let p4 = PermGroup::new(5, c4.sylow_witness.clone().unwrap()).unwrap();
        assert_eq!(p0.order(), 4);
        assert!(p4.orbit_of(4).len() > 1);
    }

    #[test]
    fn exhausted_cases() {
        let caps = Caps::default();
        let triv = PermGroup::trivial(3);
        for mode in [SearchMode::Any, SearchMode::Sylow2] {
            let out = pn_certificate_search(&triv, &SearchRequest::new(w("x1"), mode), &caps).unwrap();
            assert!(matches!(out, SearchOutcome::Exhausted { .. }));
        }
        let c2 = cyclic(2).unwrap();
        let r = check_pn(&c2, 2, SearchMode::Any, None, &caps, 0);
        assert_eq!(r.status, TheoremStatus::Fail);
        let failing: Vec<String> = r
            .results
            .iter()
            .filter(|x| x.status == TheoremStatus::Fail)
            .map(|x| x.word.to_string())
            .collect();
        assert!(failing.contains(&"x1 x1".to_string()));
    }

    #[test]
    fn pn_on_a5() {
        let caps = Caps::default();
        let a5 = alternating(5).unwrap();
        let r1 = check_pn(&a5, 1, SearchMode::Sylow2, None, &caps, 0);
        assert_eq!((r1.results.len(), r1.status), (1, TheoremStatus::Pass));
        let r2 = check_pn(&a5, 2, SearchMode::Any, None, &caps, 0);
        let words: Vec<String> = r2.results.iter().map(|x| x.word.to_string()).collect();
        assert_eq!(words, ["x1 x1", "x1 x2"]);
        assert_eq!(r2.status, TheoremStatus::Pass);
        for c in r1.certificates().chain(r2.certificates()) {
            validate_certificate(c, &a5).unwrap();
            assert!(!c.word.evaluate(&c.tuple).unwrap().is_identity());
        }
    }

    #[test]
    fn theorem_c_small() {
        let caps = Caps::default();
        let a5 = alternating(5).unwrap();
        let r = verify_theorem_c(&a5, &caps, 1);
        assert_eq!((r.n, r.results.len(), r.status), (1, 5, TheoremStatus::Pass));
        let l = psl2(7).unwrap();
        let r = verify_theorem_c(&l, &caps, 1);
        assert_eq!((r.results.len(), r.status), (8, TheoremStatus::Pass));
        for c in r.certificates() {
            validate_certificate(c, &l).unwrap();
        }
        let s4 = verify_theorem_c(&symmetric(4).unwrap(), &caps, 1);
        assert_eq!((s4.n, s4.status), (0, TheoremStatus::Pass));
    }

    #[test]
    fn theorem_b_small() {
        let caps = Caps::default();
        assert_eq!(verify_theorem_b(&alternating(5).unwrap(), &caps, 0).status, TheoremStatus::Pass);
        let r = verify_theorem_b(&symmetric(5).unwrap(), &caps, 0);
        assert_eq!((r.lambda, r.status), (1, TheoremStatus::Pass));
    }

    #[test]
    fn certificate_round_trip_and_mutations() {
        let caps = Caps::default();
        let a5 = alternating(5).unwrap();
        let req = SearchRequest::new(w("x1 x2"), SearchMode::Sylow2).at(2);
        let cert = pn_certificate_search(&a5, &req, &caps)
            .unwrap()
            .certificate()
            .unwrap()
            .clone();
        let back = PnCertificate::from_json(&cert.to_json()).unwrap();
        assert_eq!(back, cert);
        validate_certificate(&back, &a5).unwrap();

        let mut stripped = cert.clone();
        stripped.sylow_witness = None;
        validate_certificate(&stripped, &a5).unwrap();

        let mut flipped = cert.clone();
        flipped.trajectory[1] = (flipped.trajectory[1] + 1) % 5;
        assert!(validate_certificate(&flipped, &a5).is_err());

        let mut outside = cert.clone();
        let p = PermGroup::new(5, cert.sylow_witness.clone().unwrap()).unwrap();
        let other = a5.chain_elements().find(|x| !p.has(x)).unwrap();
        outside.tuple[0] = other;
        outside.trajectory = walk(outside.omega, outside.word.letters(), &outside.tuple);
        assert!(validate_certificate(&outside, &a5).is_err());
    }
}
