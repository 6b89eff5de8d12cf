//! Set partitions of `[n] = {1, …, n}` ordered by refinement.
//!
//! A [`Partition`] is stored as its restricted-growth string: position `i`
//! holds the index of the block containing element `i + 1`, and blocks are
//! numbered in order of their minimum element. Two partitions are equal iff
//! their encodings are equal, and the derived `Ord` is the lexicographic
//! order on encodings, which is the enumeration order used everywhere.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid_arg, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    rgs: Box<[u8]>,
}

impl Partition {
    /// Builds a partition from a restricted-growth string (0-based labels).
    pub fn from_rgs(rgs: Vec<u8>) -> Result<Self> {
        if rgs.is_empty() {
            return Err(invalid_arg("partition of the empty set"));
        }
        let mut next = 0u8;
        for (i, &b) in rgs.iter().enumerate() {
            if b > next {
                return Err(invalid_arg(format!(
                    "not a restricted-growth string: label {b} at position {i}"
                )));
            }
            if b == next {
                next = next
                    .checked_add(1)
                    .ok_or_else(|| invalid_arg("too many blocks"))?;
            }
        }
        Ok(Self { rgs: rgs.into() })
    }

    /// Builds a partition of `[n]` from blocks of 1-based elements, in any order.
    pub fn from_blocks<B: AsRef<[usize]>>(n: usize, blocks: &[B]) -> Result<Self> {
        if n == 0 || n > u8::MAX as usize {
            return Err(invalid_arg(format!("ground set size {n} out of range")));
        }
        let mut label = vec![u8::MAX; n];
        for (bi, block) in blocks.iter().enumerate() {
            let block = block.as_ref();
            if block.is_empty() {
                return Err(invalid_arg("empty block"));
            }
            for &e in block {
                if e == 0 || e > n {
                    return Err(invalid_arg(format!("element {e} outside 1..={n}")));
                }
                if label[e - 1] != u8::MAX {
                    return Err(invalid_arg(format!("duplicate element {e}")));
                }
                label[e - 1] = bi as u8;
            }
        }
        if let Some(missing) = label.iter().position(|&l| l == u8::MAX) {
            return Err(invalid_arg(format!("element {} missing", missing + 1)));
        }
        Ok(Self::canonical_from_labels(&label))
    }

    /// Relabels arbitrary block labels by order of first appearance.
    pub(crate) fn canonical_from_labels(labels: &[u8]) -> Self {
        let mut map = [u8::MAX; 256];
        let mut next = 0u8;
        let rgs = labels
            .iter()
            .map(|&l| {
                let slot = &mut map[l as usize];
                if *slot == u8::MAX {
                    *slot = next;
                    next += 1;
                }
                *slot
            })
            .collect::<Vec<_>>();
        Self { rgs: rgs.into() }
    }

    pub fn discrete(n: usize) -> Self {
        Self {
            rgs: (0..n as u8).collect(),
        }
    }

    pub fn total(n: usize) -> Self {
        Self {
            rgs: vec![0; n].into(),
        }
    }

    pub fn n(&self) -> usize {
        self.rgs.len()
    }

    pub fn rgs(&self) -> &[u8] {
        &self.rgs
    }

    pub fn block_count(&self) -> usize {
        self.rgs.iter().copied().max().map_or(0, |m| m as usize + 1)
    }

    /// Blocks as sorted lists of 1-based elements, sorted by minimum.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (i, &b) in self.rgs.iter().enumerate() {
            blocks[b as usize].push(i + 1);
        }
        blocks
    }

    /// Index of the block holding the 1-based element `e`.
    pub fn block_of(&self, e: usize) -> usize {
        self.rgs[e - 1] as usize
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.rgs[a - 1] == self.rgs[b - 1]
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.block_count()];
        for &b in self.rgs.iter() {
            sizes[b as usize] += 1;
        }
        sizes
    }

    pub fn is_discrete(&self) -> bool {
        self.block_count() == self.n()
    }

    pub fn is_total(&self) -> bool {
        self.block_count() == 1
    }

    /// `true` iff `self ≤ other` in the refinement order.
    pub fn refines(&self, other: &Partition) -> Result<bool> {
        check_same_n(self, other)?;
        Ok(self.refines_unchecked(other))
    }

    pub(crate) fn refines_unchecked(&self, other: &Partition) -> bool {
        let mut image = [u8::MAX; 256];
        for (&a, &b) in self.rgs.iter().zip(other.rgs.iter()) {
            let slot = &mut image[a as usize];
            if *slot == u8::MAX {
                *slot = b;
            } else if *slot != b {
                return false;
            }
        }
        true
    }

    /// Common refinement. May be the discrete partition.
    pub fn meet(&self, other: &Partition) -> Result<Partition> {
        check_same_n(self, other)?;
        Ok(self.meet_unchecked(other))
    }

    pub(crate) fn meet_unchecked(&self, other: &Partition) -> Partition {
        let mut seen: Vec<(u8, u8)> = Vec::with_capacity(self.n());
        let rgs = self
            .rgs
            .iter()
            .zip(other.rgs.iter())
            .map(|(&a, &b)| match seen.iter().position(|&p| p == (a, b)) {
                Some(i) => i as u8,
                None => {
                    seen.push((a, b));
                    (seen.len() - 1) as u8
                }
            })
            .collect::<Vec<_>>();
        Partition { rgs: rgs.into() }
    }

    /// Image under the map `i ↦ images[i]` on 0-based elements.
    pub(crate) fn permuted(&self, images: &[u8]) -> Partition {
        let mut labels = vec![0u8; self.n()];
        for (i, &b) in self.rgs.iter().enumerate() {
            labels[images[i] as usize] = b;
        }
        Partition::canonical_from_labels(&labels)
    }

    /// Parses the block text form and requires the ground set to be `[n]`.
    pub fn parse_with_n(text: &str, n: usize) -> Result<Self> {
        let p: Partition = text.parse()?;
        if p.n() != n {
            return Err(Error::Parse {
                position: 0,
                message: format!("partition of [{}], expected [{}]", p.n(), n),
            });
        }
        Ok(p)
    }
}

fn check_same_n(p: &Partition, q: &Partition) -> Result<()> {
    if p.n() != q.n() {
        return Err(invalid_arg(format!(
            "partitions of different ground sets ({} vs {})",
            p.n(),
            q.n()
        )));
    }
    Ok(())
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (bi, block) in self.blocks().iter().enumerate() {
            if bi > 0 {
                f.write_str("|")?;
            }
            for (ei, e) in block.iter().enumerate() {
                if ei > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

/// Grammar: `block ('|' block)*`, `block = elem (',' elem)*`, elements are
/// positive decimal integers. The ground set is `{1, …, k}` where `k` is the
/// number of elements listed.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let perr = |position: usize, message: String| Error::Parse { position, message };
        let mut blocks: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
        let mut pos = 0;
        let bytes = text.as_bytes();
        if bytes.is_empty() {
            return Err(perr(0, "empty input".into()));
        }
        loop {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(perr(start, "expected an element".into()));
            }
            let value: usize = text[start..pos]
                .parse()
                .map_err(|_| perr(start, "element too large".into()))?;
            blocks.last_mut().unwrap().push((value, start));
            match bytes.get(pos) {
                None => break,
                Some(b',') => pos += 1,
                Some(b'|') => {
                    pos += 1;
                    blocks.push(Vec::new());
                }
                Some(&c) => {
                    return Err(perr(pos, format!("unexpected character {:?}", c as char)));
                }
            }
        }
        let n: usize = blocks.iter().map(Vec::len).sum();
        if n > u8::MAX as usize {
            return Err(perr(0, "ground set too large".into()));
        }
        let mut label = vec![u8::MAX; n];
        for (bi, block) in blocks.iter().enumerate() {
            for &(e, at) in block {
                if e == 0 || e > n {
                    return Err(perr(at, format!("element {e} out of range 1..={n}")));
                }
                if label[e - 1] != u8::MAX {
                    return Err(perr(at, format!("duplicate element {e}")));
                }
                label[e - 1] = bi as u8;
            }
        }
        Ok(Partition::canonical_from_labels(&label))
    }
}

/// All partitions of `[n]`, in lexicographic order of their encodings.
pub fn enumerate_all(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut rgs = vec![0u8; n];
    // maxes[i] = max label among rgs[..i]
    let mut maxes = vec![0u8; n];
    loop {
        out.push(Partition {
            rgs: rgs.clone().into(),
        });
        // find the rightmost position that can be incremented
        let mut i = n - 1;
        loop {
            if i == 0 {
                return out;
            }
            if rgs[i] <= maxes[i] {
                break;
            }
            i -= 1;
        }
        rgs[i] += 1;
        for j in i + 1..n {
            maxes[j] = maxes[j - 1].max(rgs[j - 1]);
            rgs[j] = 0;
        }
    }
}

/// The proper part `Π̄_n`: every partition except the discrete and the total one.
pub fn enumerate_proper(n: usize) -> Result<Vec<Partition>> {
    if n < 3 {
        return Err(invalid_arg(format!("n = {n}, need n >= 3")));
    }
    Ok(enumerate_all(n)
        .into_iter()
        .filter(|p| !p.is_discrete() && !p.is_total())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Brute force: assign every element a block among the blocks opened so far.
    fn brute_force_count(n: usize) -> usize {
        fn rec(i: usize, n: usize, blocks: usize) -> usize {
            if i == n {
                return 1;
            }
            (0..=blocks)
                .map(|b| rec(i + 1, n, if b == blocks { blocks + 1 } else { blocks }))
                .sum()
        }
        rec(0, n, 0)
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(brute_force_count(3), 5);
        assert_eq!(brute_force_count(4), 15);
        assert_eq!(brute_force_count(5), 52);
        for n in 1..=7 {
            assert_eq!(enumerate_all(n).len(), brute_force_count(n));
        }
        assert_eq!(enumerate_proper(3).unwrap().len(), 3);
        assert_eq!(enumerate_proper(4).unwrap().len(), 13);
        assert_eq!(enumerate_proper(5).unwrap().len(), 50);
        assert!(enumerate_proper(2).is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let all = enumerate_all(6);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let proper = enumerate_proper(5).unwrap();
        assert!(!proper.contains(&Partition::discrete(5)));
        assert!(!proper.contains(&Partition::total(5)));
    }

    #[test]
    fn refinement_examples() {
        assert!(p("1,2|3|4").refines(&p("1,2|3,4")).unwrap());
        assert!(!p("1,2|3,4").refines(&p("1,3|2,4")).unwrap());
        assert!(p("1,2|3,4").refines(&p("1,2|3,4")).unwrap());
        assert!(p("1|2").refines(&p("1|2|3")).is_err());
    }

    #[test]
    fn meet_examples() {
        assert_eq!(p("1,2,3|4").meet(&p("1|2,3,4")).unwrap(), p("1|2,3|4"));
        assert_eq!(p("1,2|3,4").meet(&p("1,2|3,4")).unwrap(), p("1,2|3,4"));
        assert_eq!(
            p("1,2|3,4").meet(&p("1,3|2,4")).unwrap(),
            Partition::discrete(4)
        );
    }

    #[test]
    fn text_form() {
        let q = p("1,2|3|4");
        assert_eq!(q.blocks(), vec![vec![1, 2], vec![3], vec![4]]);
        assert_eq!(p("3|1,2|4").to_string(), "1,2|3|4");
        assert_eq!(p("4,1|2|3").to_string(), "1,4|2|3");
        assert_eq!(p("1,5|2|3|4").to_string(), "1,5|2|3|4");
        match "1,2|2,3".parse::<Partition>() {
            Err(Error::Parse { position, message }) => {
                assert_eq!(position, 4);
                assert!(message.contains("duplicate element 2"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            "1,2|4".parse::<Partition>(),
            Err(Error::Parse { position: 4, .. })
        ));
        assert!(matches!("1,,2".parse::<Partition>(), Err(Error::Parse { position: 2, .. })));
        assert!(matches!("1;2".parse::<Partition>(), Err(Error::Parse { position: 1, .. })));
        assert!("".parse::<Partition>().is_err());
        assert!(Partition::parse_with_n("1|2", 3).is_err());
    }

    #[test]
    fn from_blocks_validates() {
        assert_eq!(
            Partition::from_blocks(4, &[vec![3], vec![4, 1], vec![2]]).unwrap(),
            p("1,4|2|3")
        );
        assert!(Partition::from_blocks(3, &[vec![1, 2]]).is_err());
        assert!(Partition::from_blocks(3, &[vec![1, 2], vec![2, 3]]).is_err());
        assert!(Partition::from_blocks(3, &[vec![1, 2, 3], Vec::new()]).is_err());
        assert!(Partition::from_rgs(vec![0, 2, 1]).is_err());
    }

    #[test]
    fn refinement_is_a_partial_order() {
        for n in 1..=5 {
            let all = enumerate_all(n);
            for a in &all {
                assert!(a.refines_unchecked(a));
                for b in &all {
                    let ab = a.refines_unchecked(b);
                    if ab && b.refines_unchecked(a) {
                        assert_eq!(a, b);
                    }
                    if !ab {
                        continue;
                    }
                    for c in &all {
                        if b.refines_unchecked(c) {
                            assert!(a.refines_unchecked(c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn meet_is_greatest_lower_bound() {
        for n in 1..=4 {
            let all = enumerate_all(n);
            for a in &all {
                for b in &all {
                    let m = a.meet_unchecked(b);
                    assert!(m.refines_unchecked(a) && m.refines_unchecked(b));
                    for r in &all {
                        if r.refines_unchecked(a) && r.refines_unchecked(b) {
                            assert!(r.refines_unchecked(&m));
                        }
                    }
                }
            }
        }
    }
}
