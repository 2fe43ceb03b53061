//! Index words for mixed tensor spaces and their signed-permutation orbits.

use albanese_core::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    /// A copy of `H`.
    Co,
    /// A copy of `H*`.
    Contra,
}

/// `H`/`H*` slots in order; basis words are index tuples in `0..n`, encoded
/// big-endian in base `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordSpace {
    pub n: usize,
    pub slots: Vec<Slot>,
}

impl WordSpace {
    pub fn new(n: usize, slots: Vec<Slot>) -> Self {
        WordSpace { n, slots }
    }

    /// Slots `[Co; p] ++ [Contra; q]` for `H^{p,q}`.
    pub fn mixed(n: usize, p: usize, q: usize) -> Self {
        Self::from_blocks(n, &[(Slot::Co, p), (Slot::Contra, q)])
    }

    pub fn from_blocks(n: usize, blocks: &[(Slot, usize)]) -> Self {
        let slots = blocks.iter().flat_map(|&(s, k)| std::iter::repeat_n(s, k)).collect();
        WordSpace { n, slots }
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    /// `n^len`, or `None` on overflow.
    pub fn checked_dim(&self) -> Option<usize> {
        self.n.checked_pow(self.len() as u32)
    }

    pub fn dim(&self) -> usize {
        self.checked_dim().expect("dimension overflows usize")
    }

    /// Fails with a capacity error if the space has more than `cap` basis words.
    pub fn ensure_within(&self, cap: usize) -> Result<usize> {
        match self.checked_dim() {
            Some(d) if d <= cap => Ok(d),
            _ => Err(Error::capacity(format!(
                "tensor space of rank {} with {} slots exceeds the cap of {cap} basis words",
                self.n,
                self.len()
            ))),
        }
    }

    pub fn encode(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &i| acc * self.n + i)
    }

    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        let mut w = vec![0; self.len()];
        for k in (0..self.len()).rev() {
            w[k] = index % self.n;
            index /= self.n;
        }
        w
    }

    /// The space with slots `a` and `b` removed.
    pub fn without(&self, a: usize, b: usize) -> WordSpace {
        let slots = self
            .slots
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != a && k != b)
            .map(|(_, &s)| s)
            .collect();
        WordSpace { n: self.n, slots }
    }
}

/// A set partition of slot positions, as restricted-growth block labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlotPattern {
    pub labels: Vec<usize>,
    pub blocks: usize,
}

impl SlotPattern {
    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.labels[a] == self.labels[b]
    }

    /// Whether every pair `(a, b)` lies inside one block.
    pub fn coarsens(&self, pairs: &[(usize, usize)]) -> bool {
        pairs.iter().all(|&(a, b)| self.same_block(a, b))
    }

    /// Words with exactly this equality pattern: distinct indices per block.
    pub fn words(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut assign = vec![usize::MAX; self.blocks];
        let mut used = vec![false; n];
        fn go(
            k: usize,
            pat: &SlotPattern,
            n: usize,
            assign: &mut Vec<usize>,
            used: &mut Vec<bool>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if k == pat.blocks {
                out.push(pat.labels.iter().map(|&b| assign[b]).collect());
                return;
            }
            for i in 0..n {
                if !used[i] {
                    used[i] = true;
                    assign[k] = i;
                    go(k + 1, pat, n, assign, used, out);
                    used[i] = false;
                }
            }
        }
        go(0, self, n, &mut assign, &mut used, &mut out);
        out
    }

    /// Number of words with this pattern: `n (n−1) ⋯ (n−blocks+1)`.
    pub fn orbit_size(&self, n: usize) -> u64 {
        (0..self.blocks).map(|k| n.saturating_sub(k) as u64).product()
    }
}

/// Set partitions of `0..len` with all blocks of even size and at most
/// `max_blocks` blocks.
///
/// Their orbit sums form a basis of the invariants of the signed permutation
/// matrices on any tensor space with `len` slots: a sign change on an index
/// used an odd number of times negates the word, so only even patterns survive.
pub fn even_patterns(len: usize, max_blocks: usize) -> Vec<SlotPattern> {
    let mut out = Vec::new();
    let mut labels = Vec::with_capacity(len);
    let mut sizes = Vec::new();
    fn go(
        len: usize,
        max_blocks: usize,
        labels: &mut Vec<usize>,
        sizes: &mut Vec<usize>,
        out: &mut Vec<SlotPattern>,
    ) {
        let k = labels.len();
        let odd = sizes.iter().filter(|&&s| s % 2 == 1).count();
        if odd > len - k {
            return;
        }
        if k == len {
            out.push(SlotPattern { labels: labels.clone(), blocks: sizes.len() });
            return;
        }
        for b in 0..=sizes.len() {
            if b == sizes.len() {
                if sizes.len() == max_blocks {
                    break;
                }
                sizes.push(0);
            }
            sizes[b] += 1;
            labels.push(b);
            go(len, max_blocks, labels, sizes, out);
            labels.pop();
            sizes[b] -= 1;
            if sizes[b] == 0 {
                sizes.pop();
            }
        }
    }
    go(len, max_blocks, &mut labels, &mut sizes, &mut out);
    out
}
