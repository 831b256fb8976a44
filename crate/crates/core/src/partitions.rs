//! Partitions, rim hooks, p-cores and symmetric-group block data.
//!
//! The p-core is computed on the abacus: first-column beta-numbers are
//! distributed over p runners and every bead slides down, which is manifestly
//! independent of any removal order. The diagram-level rim-hook removal is
//! kept as an independent oracle; the tests run every removal order and
//! check all terminal results agree with the abacus.

use std::collections::BTreeMap;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts must be weakly decreasing");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// All partitions of `n`, largest part first.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for k in (1..=n.min(max)).rev() {
                prefix.push(k);
                rec(n - k, k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::new();
        let mut j = 1;
        loop {
            let count = self.parts.iter().filter(|&&p| p >= j).count();
            if count == 0 {
                break;
            }
            parts.push(count);
            j += 1;
        }
        Partition { parts }
    }

    /// Hook length at cell `(i, j)` (0-based).
    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        let arm = self.parts[i] - j - 1;
        let leg = self.parts.iter().skip(i + 1).filter(|&&p| p > j).count();
        arm + leg + 1
    }

    /// Cells with hook length exactly `p` (each indexes a removable rim p-hook).
    pub fn removable_hooks(&self, p: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            for j in 0..self.parts[i] {
                if self.hook_length(i, j) == p {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Removes the rim hook determined by cell `(i, j)`.
    pub fn remove_rim_hook(&self, i: usize, j: usize) -> Partition {
        let leg_end = (i..self.parts.len()).take_while(|&r| self.parts[r] > j).last().unwrap();
        let mut parts = self.parts.clone();
        for r in i..leg_end {
            parts[r] = self.parts[r + 1] - 1;
        }
        parts[leg_end] = j;
        Partition::new(parts)
    }

    /// The p-core via the abacus: beta-numbers slide down their runners.
    pub fn p_core(&self, p: usize) -> Partition {
        assert!(p >= 1);
        let k = self.parts.len().max(1);
        let betas: Vec<usize> = (0..k).map(|i| self.parts.get(i).copied().unwrap_or(0) + (k - 1 - i)).collect();
        let mut runners = vec![0usize; p];
        for &b in &betas {
            runners[b % p] += 1;
        }
        let mut new_betas: Vec<usize> = Vec::new();
        for (r, &count) in runners.iter().enumerate() {
            for c in 0..count {
                new_betas.push(r + c * p);
            }
        }
        new_betas.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = new_betas
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (k - 1 - i))
            .collect();
        Partition::new(parts)
    }

    /// All p-cores reachable by exhaustively trying every removal order.
    /// Used as the order-independence oracle.
    pub fn cores_by_removal(&self, p: usize) -> std::collections::BTreeSet<Partition> {
        let mut memo: std::collections::HashMap<Partition, std::collections::BTreeSet<Partition>> =
            std::collections::HashMap::new();
        fn rec(
            lam: &Partition,
            p: usize,
            memo: &mut std::collections::HashMap<Partition, std::collections::BTreeSet<Partition>>,
        ) -> std::collections::BTreeSet<Partition> {
            if let Some(s) = memo.get(lam) {
                return s.clone();
            }
            let hooks = lam.removable_hooks(p);
            let mut out = std::collections::BTreeSet::new();
            if hooks.is_empty() {
                out.insert(lam.clone());
            } else {
                for (i, j) in hooks {
                    out.extend(rec(&lam.remove_rim_hook(i, j), p, memo));
                }
            }
            memo.insert(lam.clone(), out.clone());
            out
        }
        rec(self, p, &mut memo)
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// One block of the symmetric-group algebra, keyed by its p-core.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub core: Partition,
    pub members: Vec<Partition>,
    /// Number of members with at most `n` parts.
    pub s: usize,
    /// `A_s` when s >= 1; a block with no member of at most n parts does not
    /// occur in the Schur algebra.
    pub morita_type: Option<String>,
}

#[derive(Clone, Debug)]
pub struct BlockReport {
    pub d: usize,
    pub p: usize,
    pub n: usize,
    pub blocks: Vec<Block>,
    pub warning: Option<String>,
}

/// Groups the partitions of `d` by p-core and reports the Morita type `A_s`
/// of each block, where `s` counts members with at most `n` parts. Intended
/// for `n >= 3`, `d < 2p`; outside that range the report carries a warning.
pub fn symmetric_blocks(d: usize, p: usize, n: usize) -> BlockReport {
    let mut groups: BTreeMap<Partition, Vec<Partition>> = BTreeMap::new();
    for lam in Partition::all(d) {
        groups.entry(lam.p_core(p)).or_default().push(lam);
    }
    if d == 0 {
        groups.entry(Partition::empty()).or_default().push(Partition::empty());
    }
    let blocks = groups
        .into_iter()
        .map(|(core, members)| {
            let s = members.iter().filter(|m| m.len() <= n).count();
            let morita_type = if s >= 1 { Some(format!("A{s}")) } else { None };
            Block { core, members, s, morita_type }
        })
        .collect();
    let warning = if n >= 3 && d < 2 * p {
        None
    } else {
        Some("block-to-A_s dictionary is established for n >= 3, d < 2p".into())
    };
    BlockReport { d, p, n, blocks, warning }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_partition_counts() {
        assert_eq!(Partition::all(5).len(), 7);
        assert_eq!(Partition::all(8).len(), 22);
    }

    #[test]
    fn core_smaller_than_p_is_fixed() {
        let lam = Partition::new(vec![2, 1]);
        assert_eq!(lam.p_core(4), lam);
    }

    #[test]
    fn single_row_of_size_p_empties() {
        let lam = Partition::new(vec![3]);
        assert_eq!(lam.p_core(3), Partition::empty());
    }

    #[test]
    fn two_one_is_a_two_core() {
        // hook lengths 3, 1, 1: no 2-hook
        let lam = Partition::new(vec![2, 1]);
        assert!(lam.removable_hooks(2).is_empty());
        assert_eq!(lam.p_core(2), lam);
    }

    #[test]
    fn removal_oracle_matches_abacus() {
        for d in 0..=8 {
            for p in [2usize, 3, 5] {
                for lam in Partition::all(d) {
                    let cores = lam.cores_by_removal(p);
                    assert_eq!(cores.len(), 1, "order dependence for {lam} at p={p}");
                    assert_eq!(cores.into_iter().next().unwrap(), lam.p_core(p));
                }
            }
        }
    }

    #[test]
    fn blocks_of_three_at_p2() {
        let report = symmetric_blocks(3, 2, 3);
        assert_eq!(report.blocks.len(), 2);
        let types: Vec<Option<String>> = report.blocks.iter().map(|b| b.morita_type.clone()).collect();
        assert!(types.contains(&Some("A2".into())));
        assert!(types.contains(&Some("A1".into())));
        // {(3),(1,1,1)} share the 2-core (1)
        let a2 = report.blocks.iter().find(|b| b.s == 2).unwrap();
        assert_eq!(a2.core, Partition::new(vec![1]));
        assert_eq!(a2.members.len(), 2);
    }

    #[test]
    fn blocks_of_two_at_p2() {
        let report = symmetric_blocks(2, 2, 3);
        assert_eq!(report.blocks.len(), 1);
        assert_eq!(report.blocks[0].s, 2);
    }

    #[test]
    fn block_of_one() {
        let report = symmetric_blocks(1, 5, 2);
        assert_eq!(report.blocks.len(), 1);
        assert_eq!(report.blocks[0].morita_type, Some("A1".into()));
    }

    #[test]
    fn conjugate_involution() {
        for lam in Partition::all(7) {
            assert_eq!(lam.conjugate().conjugate(), lam);
        }
    }
}
