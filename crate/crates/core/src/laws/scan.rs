//! Depth-first scan of a tuple space with prefix-product reuse.
//!
//! Variables are assigned in order `x1, x2, ...`. After assigning `x1..x_v`, the
//! longest prefix of the word using only those variables is already a fixed
//! permutation, so moving the last variable only recomputes the tail.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, Ordering};

use crate::freeword::FreeWord;
use crate::permgroup::Permutation;

pub(crate) struct TupleScan<'a> {
    letters: Vec<(usize, bool)>,
    /// `cut[v]`: length of the longest word prefix using only the first `v` variables.
    cut: Vec<usize>,
    first: &'a [Permutation],
    first_inv: Vec<Permutation>,
    rest: &'a [Permutation],
    rest_inv: Vec<Permutation>,
    degree: usize,
}

impl<'a> TupleScan<'a> {
    /// `first` ranges over `x1`, `rest` over every other variable.
    pub fn new(word: &FreeWord, degree: usize, first: &'a [Permutation], rest: &'a [Permutation]) -> Self {
        let letters: Vec<(usize, bool)> = word
            .letters()
            .iter()
            .map(|l| (l.slot(), l.is_inverse()))
            .collect();
        let k = word.num_vars();
        let cut = (0..=k)
            .map(|v| letters.iter().take_while(|(s, _)| *s < v).count())
            .collect();
        TupleScan {
            letters,
            cut,
            first,
            first_inv: first.iter().map(|x| x.inverse()).collect(),
            rest,
            rest_inv: rest.iter().map(|x| x.inverse()).collect(),
            degree,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.cut.len() - 1
    }

    /// Number of tuples visited by a full scan.
    pub fn size(&self) -> Option<u128> {
        let k = self.num_vars();
        if k == 0 {
            return Some(1);
        }
        (self.rest.len() as u128)
            .checked_pow(k as u32 - 1)?
            .checked_mul(self.first.len() as u128)
    }

    pub fn element(&self, var: usize, index: usize) -> &Permutation {
        if var == 0 {
            &self.first[index]
        } else {
            &self.rest[index]
        }
    }

    /// Visits every tuple whose first entry is `first[shard]`, in lexicographic index
    /// order. `visit` receives the index tuple and the word value.
    pub fn run_shard<F>(&self, shard: usize, cancel: Option<&AtomicBool>, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize], &Permutation) -> ControlFlow<()>,
    {
        let k = self.num_vars();
        if k == 0 {
            return visit(&[], &Permutation::identity(self.degree));
        }
        let mut idx = vec![0usize; k];
        idx[0] = shard;
        let prefix = self.extend(&Permutation::identity(self.degree), 0, &idx);
        self.descend(1, &prefix, &mut idx, cancel, visit)
    }

    /// Runs every shard in order.
    pub fn run<F>(&self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize], &Permutation) -> ControlFlow<()>,
    {
        let shards = if self.num_vars() == 0 { 1 } else { self.first.len() };
        for s in 0..shards {
            self.run_shard(s, None, visit)?;
        }
        ControlFlow::Continue(())
    }

    /// Multiplies in the letters between `cut[v]` and `cut[v + 1]`.
    fn extend(&self, prefix: &Permutation, v: usize, idx: &[usize]) -> Permutation {
        let mut acc = prefix.clone();
        for &(slot, inverse) in &self.letters[self.cut[v]..self.cut[v + 1]] {
            let g = match (slot == 0, inverse) {
                (true, false) => &self.first[idx[0]],
                (true, true) => &self.first_inv[idx[0]],
                (false, false) => &self.rest[idx[slot]],
                (false, true) => &self.rest_inv[idx[slot]],
            };
            acc = acc.mul(g);
        }
        acc
    }

    fn descend<F>(
        &self,
        v: usize,
        prefix: &Permutation,
        idx: &mut Vec<usize>,
        cancel: Option<&AtomicBool>,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[usize], &Permutation) -> ControlFlow<()>,
    {
        let k = self.num_vars();
        if v == k {
            return visit(idx, prefix);
        }
        if cancel.is_some_and(|c| c.load(Ordering::Relaxed)) {
            return ControlFlow::Break(());
        }
        for i in 0..self.rest.len() {
            idx[v] = i;
            let next = self.extend(prefix, v, idx);
            self.descend(v + 1, &next, idx, cancel, visit)?;
        }
        ControlFlow::Continue(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::symmetric;

    #[test]
    fn matches_direct_evaluation() {
        let s3 = symmetric(3).unwrap().elements(100).unwrap();
        for text in ["x1 x2 x1^-1 x2^-1", "x2 x1 x2", "x1 x1", "x1 x2 x3 x2^-1"] {
            let w: FreeWord = text.parse().unwrap();
            let scan = TupleScan::new(&w, 3, &s3, &s3);
            let mut seen = 0u128;
            let _ = scan.run(&mut |idx, value| {
                let tuple: Vec<Permutation> =
                    idx.iter().map(|&i| s3[i].clone()).collect();
                assert_eq!(&w.evaluate(&tuple).unwrap(), value, "{text} at {idx:?}");
                seen += 1;
                ControlFlow::Continue(())
            });
            assert_eq!(Some(seen), scan.size());
        }
    }
}
