use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use super::partition::{partitions_of, Partition};

type LrKey = (Partition, Partition, Partition);

fn memo() -> &'static RwLock<HashMap<LrKey, u64>> {
    static MEMO: OnceLock<RwLock<HashMap<LrKey, u64>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Littlewood–Richardson coefficient `c^ν_{λξ}`, counted as LR tableaux of
/// skew shape `ν/λ` and content `ξ`.
pub fn lr_coefficient(lambda: &Partition, xi: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + xi.size() || !nu.contains(lambda) || !nu.contains(xi) {
        return 0;
    }
    if lambda.is_empty() || xi.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), xi.clone(), nu.clone());
    if let Some(&c) = memo().read().expect("lr memo poisoned").get(&key) {
        return c;
    }
    let c = count_lr_tableaux(lambda, xi, nu);
    memo().write().expect("lr memo poisoned").insert(key, c);
    c
}

/// The Schur expansion of `s_λ · s_ξ`.
pub fn lr_product(lambda: &Partition, xi: &Partition) -> BTreeMap<Partition, u64> {
    if lambda.is_empty() {
        return BTreeMap::from([(xi.clone(), 1)]);
    }
    if xi.is_empty() {
        return BTreeMap::from([(lambda.clone(), 1)]);
    }
    let max_len = lambda.len() + xi.len();
    partitions_of(lambda.size() + xi.size(), Some(max_len))
        .into_iter()
        .filter_map(|nu| {
            let c = lr_coefficient(lambda, xi, &nu);
            (c > 0).then_some((nu, c))
        })
        .collect()
}

struct Filler<'a> {
    lambda: &'a Partition,
    content: &'a [usize],
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    counts: Vec<usize>,
}

fn count_lr_tableaux(lambda: &Partition, xi: &Partition, nu: &Partition) -> u64 {
    // Reverse reading order: rows top to bottom, each row right to left.
    let mut cells = Vec::with_capacity(xi.size());
    for r in 0..nu.len() {
        for c in (lambda.part(r)..nu.part(r)).rev() {
            cells.push((r, c));
        }
    }
    let mut filler = Filler {
        lambda,
        content: xi.parts(),
        cells,
        grid: nu.parts().iter().map(|&w| vec![0; w]).collect(),
        counts: vec![0; xi.len()],
    };
    filler.go(0)
}

impl Filler<'_> {
    fn in_skew(&self, r: usize, c: usize) -> bool {
        r < self.grid.len() && c < self.grid[r].len() && c >= self.lambda.part(r)
    }

    fn go(&mut self, idx: usize) -> u64 {
        if idx == self.cells.len() {
            return 1;
        }
        let (r, c) = self.cells[idx];
        let mut hi = self.content.len();
        if self.in_skew(r, c + 1) {
            hi = hi.min(self.grid[r][c + 1]);
        }
        let lo = if r > 0 && self.in_skew(r - 1, c) {
            self.grid[r - 1][c] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in lo..=hi {
            let k = v - 1;
            if self.counts[k] >= self.content[k] {
                continue;
            }
            if k > 0 && self.counts[k] + 1 > self.counts[k - 1] {
                continue;
            }
            self.counts[k] += 1;
            self.grid[r][c] = v;
            total += self.go(idx + 1);
            self.grid[r][c] = 0;
            self.counts[k] -= 1;
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_coefficients() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[1, 1, 1])), 0);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[3])), 0);
    }

    #[test]
    fn symmetric_in_factors() {
        for a in 0..=4 {
            for b in 0..=3 {
                for l in partitions_of(a, None) {
                    for x in partitions_of(b, None) {
                        for nu in partitions_of(a + b, None) {
                            assert_eq!(lr_coefficient(&l, &x, &nu), lr_coefficient(&x, &l, &nu));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pieri_rule_for_single_row() {
        // s_λ s_(k): horizontal strips, each with coefficient 1.
        let prod = lr_product(&p(&[2, 1]), &p(&[2]));
        let expected: BTreeMap<_, _> =
            [p(&[4, 1]), p(&[3, 2]), p(&[3, 1, 1]), p(&[2, 2, 1])].into_iter().map(|q| (q, 1)).collect();
        assert_eq!(prod, expected);
    }
}
