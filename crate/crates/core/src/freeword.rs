//! Words in the free group on `x1, x2, ...`.
//!
//! A word `w = y_1 ⋯ y_n` has partial subwords `w_i = y_1 ⋯ y_i` with `w_0 = 1`.
//! Substituting permutations for the variables gives the word map; products are
//! taken left to right, matching the right action of [`Permutation`].
//!
//! # Symmetry levels
//!
//! Word searches only need one word per orbit of a symmetry group:
//!
//! * [`Symmetry::RenameInvert`]: permuting variables and replacing a variable by its
//!   inverse. Substituting the correspondingly renamed or inverted tuple gives the
//!   same partial-word values `w_i(ḡ)` at every `i`, so both law-ness and point
//!   trajectories are preserved.
//! * [`Symmetry::Full`]: additionally cyclic shifts of the cyclically reduced word
//!   and inversion of the whole word. A cyclic shift is a conjugate in the free
//!   group, so `w(G) = 1` is unchanged; trajectories are not, so this level is for
//!   law questions only.
//!
//! # Text form
//!
//! Whitespace-separated tokens `x<i>` or `x<i>^-1`, for example `x1 x2^-1 x1`.
//! The empty word is written `1`.
//!
//! # Enumeration order
//!
//! Letters are ordered `x1 < x1^-1 < x2 < x2^-1 < ...` and words of one length
//! lexicographically. [`enumerate_words`] yields the least member of each orbit
//! in increasing order. This order is stable across releases.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::permgroup::Permutation;

/// `x_var` or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter {
    var: u32,
    inverse: bool,
}

impl Letter {
    /// `x_var^{+1}`; `var` starts at 1.
    pub fn pos(var: u32) -> Letter {
        assert!(var >= 1, "variables are numbered from 1");
        Letter {
            var,
            inverse: false,
        }
    }

    /// `x_var^{-1}`.
    pub fn neg(var: u32) -> Letter {
        assert!(var >= 1, "variables are numbered from 1");
        Letter { var, inverse: true }
    }

    pub fn var(self) -> u32 {
        self.var
    }

    /// Variable index counted from 0.
    pub fn slot(self) -> usize {
        self.var as usize - 1
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inv(self) -> Letter {
        Letter {
            var: self.var,
            inverse: !self.inverse,
        }
    }

    fn key(self) -> (u32, bool) {
        (self.var, self.inverse)
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "x{}^-1", self.var)
        } else {
            write!(f, "x{}", self.var)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    RenameInvert,
    Full,
}

/// A word, not necessarily reduced; most operations expect reduced words and
/// [`FreeWord::new`] reduces.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    /// Reduced word from letters.
    pub fn new(letters: Vec<Letter>) -> FreeWord {
        FreeWord { letters }.reduce()
    }

    /// Word with the letters exactly as given.
    pub fn from_letters(letters: Vec<Letter>) -> FreeWord {
        FreeWord { letters }
    }

    pub fn empty() -> FreeWord {
        FreeWord::default()
    }

    /// `x_var^exp` (reduced).
    pub fn power(var: u32, exp: i32) -> FreeWord {
        let l = if exp < 0 { Letter::neg(var) } else { Letter::pos(var) };
        FreeWord {
            letters: vec![l; exp.unsigned_abs() as usize],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest variable index used (0 for the empty word).
    pub fn num_vars(&self) -> usize {
        self.letters.iter().map(|l| l.var as usize).max().unwrap_or(0)
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1].inv())
    }

    /// Free cancellation of adjacent inverse pairs.
    pub fn reduce(&self) -> FreeWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord { letters: out }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// Reduced product `self · other`.
    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        FreeWord::new(letters)
    }

    /// Strips matching first/last letters `x ... x^-1` repeatedly.
    pub fn cyclically_reduce(&self) -> FreeWord {
        let w = self.reduce();
        let mut lo = 0;
        let mut hi = w.letters.len();
        while hi - lo >= 2 && w.letters[lo] == w.letters[hi - 1].inv() {
            lo += 1;
            hi -= 1;
        }
        FreeWord {
            letters: w.letters[lo..hi].to_vec(),
        }
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_reduced()
            && (self.letters.len() < 2
                || self.letters[0] != self.letters[self.letters.len() - 1].inv())
    }

    /// `[w_0, w_1, ..., w_n]`.
    pub fn partial_words(&self) -> Vec<FreeWord> {
        (0..=self.len())
            .map(|i| FreeWord {
                letters: self.letters[..i].to_vec(),
            })
            .collect()
    }

    /// Prefix `w_i`.
    pub fn prefix(&self, i: usize) -> FreeWord {
        FreeWord {
            letters: self.letters[..i].to_vec(),
        }
    }

    /// `w̃_j` for `1 ≤ j ≤ n`: `w_j^{-1}` when the j-th letter is inverted,
    /// `w_{j-1}^{-1}` otherwise.
    pub fn w_tilde(&self, j: usize) -> Result<FreeWord> {
        if j == 0 || j > self.len() {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: self.len(),
            });
        }
        let upto = if self.letters[j - 1].is_inverse() { j } else { j - 1 };
        Ok(self.prefix(upto).inverse())
    }

    /// Rotation starting at letter `k`.
    pub fn rotate(&self, k: usize) -> FreeWord {
        let n = self.letters.len();
        if n == 0 {
            return self.clone();
        }
        let k = k % n;
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        FreeWord { letters }
    }

    /// Renames variable `v` to `perm[v - 1]` (1-based targets).
    pub fn rename(&self, perm: &[u32]) -> FreeWord {
        FreeWord {
            letters: self
                .letters
                .iter()
                .map(|l| Letter {
                    var: perm[l.slot()],
                    inverse: l.inverse,
                })
                .collect(),
        }
    }

    /// Replaces `x_var` by `x_var^{-1}` throughout.
    pub fn invert_variable(&self, var: u32) -> FreeWord {
        FreeWord {
            letters: self
                .letters
                .iter()
                .map(|&l| if l.var == var { l.inv() } else { l })
                .collect(),
        }
    }

    fn rename_invert_canonical(&self) -> FreeWord {
        let mut map: Vec<Option<(u32, bool)>> = vec![None; self.num_vars()];
        let mut next = 1;
        let letters = self
            .letters
            .iter()
            .map(|l| {
                let (var, flip) = *map[l.slot()].get_or_insert_with(|| {
                    let v = next;
                    next += 1;
                    (v, l.inverse)
                });
                Letter {
                    var,
                    inverse: l.inverse != flip,
                }
            })
            .collect();
        FreeWord { letters }
    }

    /// Least member of the symmetry orbit of a reduced word.
    pub fn canonical_form(&self, level: Symmetry) -> FreeWord {
        match level {
            Symmetry::RenameInvert => self.rename_invert_canonical(),
            Symmetry::Full => {
                let c = self.cyclically_reduce();
                let inv = c.inverse();
                (0..c.len().max(1))
                    .flat_map(|k| [c.rotate(k), inv.rotate(k)])
                    .map(|w| w.rename_invert_canonical())
                    .min()
                    .unwrap_or_default()
            }
        }
    }

    pub fn is_canonical(&self, level: Symmetry) -> bool {
        match level {
            Symmetry::RenameInvert => self.is_reduced() && self.canonical_form(level) == *self,
            Symmetry::Full => {
                self.is_cyclically_reduced() && self.canonical_form(level) == *self
            }
        }
    }

    fn check_tuple(&self, tuple: &[Permutation]) -> Result<usize> {
        let k = self.num_vars();
        if tuple.len() < k {
            return Err(Error::TupleTooShort {
                needed: k,
                found: tuple.len(),
            });
        }
        let degree = tuple.first().map(|g| g.degree()).unwrap_or(0);
        for g in tuple {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        Ok(degree)
    }

    /// Word map value `w(g_1, ..., g_k)`. The tuple must be non-empty unless the
    /// word is empty, in which case `degree` of the result is taken from the tuple.
    pub fn evaluate(&self, tuple: &[Permutation]) -> Result<Permutation> {
        let degree = self.check_tuple(tuple)?;
        let inverses: Vec<Option<Permutation>> = (0..self.num_vars())
            .map(|v| {
                self.letters
                    .iter()
                    .any(|l| l.slot() == v && l.inverse)
                    .then(|| tuple[v].inverse())
            })
            .collect();
        let mut acc = Permutation::identity(degree);
        for l in &self.letters {
            let g = if l.inverse {
                inverses[l.slot()].as_ref().unwrap()
            } else {
                &tuple[l.slot()]
            };
            acc = acc.mul(g);
        }
        Ok(acc)
    }

    /// Conjugators `a_j = b_{i_j}^{w̃_j(ḡ)}` for the perturbed tuple `b̄ḡ`
    /// (componentwise products `b_i g_i`), checked against
    /// `w(b̄ḡ) = a_1^{ε_1} ⋯ a_n^{ε_n} · w(ḡ)`.
    pub fn conjugator_decomposition(
        &self,
        g: &[Permutation],
        b: &[Permutation],
    ) -> Result<Vec<Permutation>> {
        self.check_tuple(g)?;
        self.check_tuple(b)?;
        let mut a = Vec::with_capacity(self.len());
        for (j, l) in self.letters.iter().enumerate() {
            let conj = self.w_tilde(j + 1)?.evaluate(g)?;
            a.push(b[l.slot()].conjugate_by(&conj));
        }
        let bg: Vec<Permutation> = b.iter().zip(g).map(|(x, y)| x.mul(y)).collect();
        let lhs = self.evaluate(&bg)?;
        let mut rhs = Permutation::identity(lhs.degree());
        for (aj, l) in a.iter().zip(&self.letters) {
            rhs = if l.inverse {
                rhs.mul(&aj.inverse())
            } else {
                rhs.mul(aj)
            };
        }
        rhs = rhs.mul(&self.evaluate(g)?);
        if lhs != rhs {
            return Err(Error::IdentityViolation {
                word: self.to_string(),
            });
        }
        Ok(a)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses the token syntax; the result is reduced.
impl FromStr for FreeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<FreeWord> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(FreeWord::empty());
        }
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let bad = || Error::Parse(format!("bad word token {tok:?}"));
            let body = tok.strip_prefix('x').ok_or_else(bad)?;
            let (num, inverse) = match body.strip_suffix("^-1") {
                Some(n) => (n, true),
                None => (body, false),
            };
            let var: u32 = num.parse().map_err(|_| bad())?;
            if var == 0 {
                return Err(bad());
            }
            letters.push(Letter { var, inverse });
        }
        Ok(FreeWord::new(letters))
    }
}

impl serde::Serialize for FreeWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for FreeWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Iterator over the canonical words of one length, in increasing order.
///
/// Words are grown letter by letter and only canonical prefixes are ever
/// extended, so memory stays linear in the length.
pub struct WordEnumerator {
    n: usize,
    level: Symmetry,
    /// Current word; `choice[i]` indexes the candidate list at position `i`.
    letters: Vec<Letter>,
    choice: Vec<usize>,
    /// `vars_used[i]` = variables used by `letters[..i]`.
    vars_used: Vec<u32>,
    started: bool,
    done: bool,
}

/// Candidates at a position, in letter order: every used variable with both signs,
/// then the next fresh variable with positive sign, never cancelling `prev`.
fn candidate(used: u32, prev: Option<Letter>, idx: usize) -> Option<Letter> {
    let mut k = 0;
    for var in 1..=used {
        for inverse in [false, true] {
            let l = Letter { var, inverse };
            if Some(l.inv()) == prev {
                continue;
            }
            if k == idx {
                return Some(l);
            }
            k += 1;
        }
    }
    (k == idx).then_some(Letter::pos(used + 1))
}

impl WordEnumerator {
    fn new(n: usize, level: Symmetry) -> Self {
        WordEnumerator {
            n,
            level,
            letters: Vec::with_capacity(n),
            choice: Vec::with_capacity(n),
            vars_used: vec![0],
            started: false,
            done: n == 0,
        }
    }

    /// Fills positions from the current depth with first candidates.
    fn descend(&mut self) {
        while self.letters.len() < self.n {
            let used = *self.vars_used.last().unwrap();
            let l = candidate(used, self.letters.last().copied(), 0).unwrap();
            self.push(l, 0);
        }
    }

    fn push(&mut self, l: Letter, idx: usize) {
        let used = *self.vars_used.last().unwrap();
        self.letters.push(l);
        self.choice.push(idx);
        self.vars_used.push(used.max(l.var));
    }

    /// Moves to the next RENAME_INVERT-canonical word of length n.
    fn advance(&mut self) -> bool {
        while let Some(idx) = self.choice.pop() {
            self.letters.pop();
            self.vars_used.pop();
            let used = *self.vars_used.last().unwrap();
            if let Some(l) = candidate(used, self.letters.last().copied(), idx + 1) {
                // The first letter is always x1.
                if self.letters.is_empty() {
                    continue;
                }
                self.push(l, idx + 1);
                self.descend();
                return true;
            }
        }
        false
    }
}

impl Iterator for WordEnumerator {
    type Item = FreeWord;

    fn next(&mut self) -> Option<FreeWord> {
        loop {
            if self.done {
                return None;
            }
            if !self.started {
                self.started = true;
                self.descend();
            } else if !self.advance() {
                self.done = true;
                return None;
            }
            let w = FreeWord {
                letters: self.letters.clone(),
            };
            match self.level {
                Symmetry::RenameInvert => return Some(w),
                Symmetry::Full => {
                    if w.is_cyclically_reduced() && w.canonical_form(Symmetry::Full) == w {
                        return Some(w);
                    }
                }
            }
        }
    }
}

/// One representative per symmetry orbit of reduced words of length `n`
/// (cyclically reduced words at [`Symmetry::Full`]).
pub fn enumerate_words(n: usize, level: Symmetry) -> WordEnumerator {
    WordEnumerator::new(n, level)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    fn perm(d: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(d, s).unwrap()
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(w("x1 x2^-1 x1").to_string(), "x1 x2^-1 x1");
        assert_eq!(w("1"), FreeWord::empty());
        assert_eq!(FreeWord::empty().to_string(), "1");
        assert!("x0".parse::<FreeWord>().is_err());
        assert!("y1".parse::<FreeWord>().is_err());
        assert!("x1^2".parse::<FreeWord>().is_err());
    }

    #[test]
    fn reduction() {
        let raw = FreeWord::from_letters(vec![Letter::pos(1), Letter::neg(1)]);
        assert_eq!(raw.reduce(), FreeWord::empty());
        let raw = FreeWord::from_letters(vec![
            Letter::pos(1),
            Letter::pos(2),
            Letter::neg(2),
            Letter::pos(1),
        ]);
        assert_eq!(raw.reduce(), FreeWord::power(1, 2));
        let r = w("x1 x2^-1 x1");
        assert_eq!(r.reduce(), r);
    }

    #[test]
    fn partial_subwords() {
        let p = w("x1 x2^-1 x1").partial_words();
        let shown: Vec<String> = p.iter().map(|x| x.to_string()).collect();
        assert_eq!(shown, ["1", "x1", "x1 x2^-1", "x1 x2^-1 x1"]);
        assert_eq!(w("x1").partial_words().len(), 2);
        assert_eq!(FreeWord::empty().partial_words(), vec![FreeWord::empty()]);
    }

    #[test]
    fn w_tilde_values() {
        let x = w("x1 x2^-1 x1");
        assert_eq!(x.w_tilde(1).unwrap(), FreeWord::empty());
        assert_eq!(x.w_tilde(2).unwrap(), w("x2 x1^-1"));
        assert_eq!(x.w_tilde(3).unwrap(), w("x2 x1^-1"));
        assert!(x.w_tilde(0).is_err());
        assert!(x.w_tilde(4).is_err());
    }

    #[test]
    fn evaluation() {
        let t = [perm(3, "(0 1)"), perm(3, "(1 2)")];
        let v = w("x1 x2").evaluate(&t).unwrap();
        assert_eq!(v.images(), &[2, 0, 1]);
        let id = FreeWord::from_letters(vec![Letter::pos(1), Letter::neg(1)])
            .evaluate(&t)
            .unwrap();
        assert!(id.is_identity());
        let c = perm(5, "(0 1 2 3 4)");
        assert_eq!(w("x1 x1").evaluate(&[c]).unwrap().to_string(), "(0 2 4 1 3)");
        assert_eq!(
            w("x1 x2").evaluate(&t[..1]).unwrap_err(),
            Error::TupleTooShort { needed: 2, found: 1 }
        );
    }

    #[test]
    fn decomposition_examples() {
        let g = [perm(3, "(0 1)"), perm(3, "(1 2)")];
        let one = [Permutation::identity(3), Permutation::identity(3)];
        let a = w("x1 x2").conjugator_decomposition(&g, &one).unwrap();
        assert!(a.iter().all(|x| x.is_identity()));
        let b = [perm(3, "(0 1 2)"), perm(3, "(0 2 1)")];
        let a = w("x1").conjugator_decomposition(&g, &b).unwrap();
        assert_eq!(a, vec![b[0].clone()]);
        // b1 g1 = (1 2) and b2 g2 = (0 1), so w(b̄ḡ) = (1 2)(0 1) sends 0->1, 1->2, 2->0.
        let a = w("x1 x2").conjugator_decomposition(&g, &b).unwrap();
        assert_eq!(a[0], b[0]);
        assert_eq!(a[1], b[1].conjugate_by(&g[0].inverse()));
        let lhs = a[0].mul(&a[1]).mul(&g[0]).mul(&g[1]);
        assert_eq!(lhs.images(), &[1, 2, 0]);
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(w("x2^-1 x1").canonical_form(Symmetry::RenameInvert), w("x1 x2"));
        assert_eq!(w("x1^-1 x2^-1").canonical_form(Symmetry::RenameInvert), w("x1 x2"));
        assert_eq!(w("x1 x2 x1^-1").canonical_form(Symmetry::Full), w("x1"));
        assert_eq!(w("x2 x1 x1").canonical_form(Symmetry::Full), w("x1 x1 x2"));
    }

    #[test]
    fn enumeration_counts() {
        let e1: Vec<FreeWord> = enumerate_words(1, Symmetry::RenameInvert).collect();
        assert_eq!(e1, vec![w("x1")]);
        let e2: Vec<FreeWord> = enumerate_words(2, Symmetry::RenameInvert).collect();
        assert_eq!(e2, vec![w("x1 x1"), w("x1 x2")]);
        let e3: Vec<String> = enumerate_words(3, Symmetry::RenameInvert)
            .map(|x| x.to_string())
            .collect();
        assert_eq!(
            e3,
            [
                "x1 x1 x1",
                "x1 x1 x2",
                "x1 x2 x1",
                "x1 x2 x1^-1",
                "x1 x2 x2",
                "x1 x2 x3"
            ]
        );
        let f3: Vec<String> = enumerate_words(3, Symmetry::Full).map(|x| x.to_string()).collect();
        assert_eq!(f3, ["x1 x1 x1", "x1 x1 x2", "x1 x2 x3"]);
        assert_eq!(enumerate_words(0, Symmetry::Full).count(), 0);
    }
}
