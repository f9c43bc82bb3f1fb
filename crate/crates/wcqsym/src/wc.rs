//! Weak compositions and their structural combinatorics.
//!
//! A weak composition is a finite sequence of non-negative integers in which
//! trailing zeros are significant: `(1,0)` and `(1)` are different objects.
//! Every sequence splits uniquely as zero runs alternating with maximal runs
//! of positive parts (*blocks*); most of the algebra downstream is phrased in
//! terms of that normal form, of descent/peak sets read off a cell line of
//! length `total_weight`, and of a refinement order defined through aligned
//! displays.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A weak composition: a sequence of non-negative parts, trailing zeros
/// significant. Ordered by (weight, total weight, length, lex on parts).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeakComposition {
    parts: Vec<u64>,
}

/// One maximal run of positive parts inside a weak composition, together with
/// the zeros that follow it and the half-open interval `(start, end]` of
/// cells it occupies (each zero part occupies one cell, each positive part
/// `s` occupies `s` cells).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub parts: Vec<u64>,
    pub trailing_zeros: u64,
    pub start: u64,
    pub end: u64,
}

/// The normal form of a weak composition: leading zeros, then alternating
/// blocks of positive parts, each carrying its trailing zero run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockStructure {
    pub leading_zeros: u64,
    pub blocks: Vec<Block>,
}

impl BlockStructure {
    /// The zero-run exponents `i_1, ..., i_{k+1}` (length = #blocks + 1).
    pub fn zero_runs(&self) -> Vec<u64> {
        let mut runs = vec![self.leading_zeros];
        runs.extend(self.blocks.iter().map(|b| b.trailing_zeros));
        runs
    }
}

impl WeakComposition {
    pub fn new(parts: impl Into<Vec<u64>>) -> Self {
        WeakComposition { parts: parts.into() }
    }

    pub fn empty() -> Self {
        WeakComposition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts, written `|α|`.
    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of parts (zeros included), written `ℓ(α)`.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Number of zero parts, written `ℓ₀(α)`.
    pub fn zero_length(&self) -> usize {
        self.parts.iter().filter(|&&p| p == 0).count()
    }

    /// `|α| + ℓ₀(α)`, the number of cells the composition occupies.
    pub fn total_weight(&self) -> u64 {
        self.weight() + self.zero_length() as u64
    }

    /// True if no part is zero (the empty sequence counts).
    pub fn is_composition(&self) -> bool {
        self.parts.iter().all(|&p| p > 0)
    }

    /// Split into the normal form `(0^{i_1}, μ_1, 0^{i_2}, ..., μ_k, 0^{i_{k+1}})`.
    pub fn blocks(&self) -> BlockStructure {
        let mut leading_zeros = 0u64;
        let mut blocks: Vec<Block> = Vec::new();
        let mut pos = 0u64;
        let mut idx = 0usize;
        while idx < self.parts.len() && self.parts[idx] == 0 {
            leading_zeros += 1;
            pos += 1;
            idx += 1;
        }
        while idx < self.parts.len() {
            let start = pos;
            let mut block_parts = Vec::new();
            while idx < self.parts.len() && self.parts[idx] > 0 {
                block_parts.push(self.parts[idx]);
                pos += self.parts[idx];
                idx += 1;
            }
            let end = pos;
            let mut trailing = 0u64;
            while idx < self.parts.len() && self.parts[idx] == 0 {
                trailing += 1;
                pos += 1;
                idx += 1;
            }
            blocks.push(Block { parts: block_parts, trailing_zeros: trailing, start, end });
        }
        BlockStructure { leading_zeros, blocks }
    }

    /// Descent set: the end cell of every positive part, where zeros occupy
    /// one cell each and a positive part `s` occupies `s` cells.
    pub fn descent_set(&self) -> BTreeSet<u64> {
        let mut descents = BTreeSet::new();
        let mut pos = 0u64;
        for &p in &self.parts {
            if p == 0 {
                pos += 1;
            } else {
                pos += p;
                descents.insert(pos);
            }
        }
        descents
    }

    /// Peak set: descents `i` with `2 <= i <= total_weight - 1` whose
    /// predecessor cell is not a descent.
    pub fn peak_set(&self) -> BTreeSet<u64> {
        let descents = self.descent_set();
        let tw = self.total_weight();
        descents
            .iter()
            .copied()
            .filter(|&i| i >= 2 && i + 1 <= tw && !descents.contains(&(i - 1)))
            .collect()
    }

    /// Parts in reverse order.
    pub fn reverse(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        WeakComposition::new(parts)
    }

    /// Complement: replace each positive part `a` by `(1^a)` and each zero by
    /// `(0)`, then join consecutive images by near-concatenation when both
    /// original parts were positive and by concatenation otherwise.
    pub fn complement(&self) -> Self {
        if self.parts.is_empty() {
            return WeakComposition::empty();
        }
        let image = |a: u64| -> WeakComposition {
            if a == 0 {
                WeakComposition::new([0])
            } else {
                WeakComposition::new(vec![1u64; a as usize])
            }
        };
        let mut result = image(self.parts[0]);
        for q in 1..self.parts.len() {
            let next = image(self.parts[q]);
            if self.parts[q - 1] > 0 && self.parts[q] > 0 {
                result = result.near_concat(&next);
            } else {
                result = result.concat(&next);
            }
        }
        result
    }

    /// Transpose: reverse, then complement (equivalently complement, then
    /// reverse).
    pub fn transpose(&self) -> Self {
        self.reverse().complement()
    }

    /// Erase all zero parts, leaving a composition.
    pub fn bar(&self) -> Self {
        WeakComposition::new(
            self.parts.iter().copied().filter(|&p| p > 0).collect::<Vec<_>>(),
        )
    }

    /// Concatenation `α · β`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        WeakComposition::new(parts)
    }

    /// Near-concatenation `α ∨ β`: fuse the last part of `α` with the first
    /// part of `β`. Panics if either operand is empty.
    pub fn near_concat(&self, other: &Self) -> Self {
        assert!(
            !self.parts.is_empty() && !other.parts.is_empty(),
            "near_concat: operands must be nonempty"
        );
        let mut parts = self.parts.clone();
        *parts.last_mut().unwrap() += other.parts[0];
        parts.extend_from_slice(&other.parts[1..]);
        WeakComposition::new(parts)
    }

    /// Align `self` against `alpha`'s block weights: leading zeros, then for
    /// each block of `alpha` a run of positive parts with the same weight,
    /// separated by zero runs. Returns the zero-run exponents of the display
    /// and the aligned positive runs, or `None` if no such display exists.
    fn align_display(&self, alpha: &Self) -> Option<(Vec<u64>, Vec<Vec<u64>>)> {
        let ab = alpha.blocks();
        let mut runs = Vec::with_capacity(ab.blocks.len() + 1);
        let mut groups = Vec::with_capacity(ab.blocks.len());
        let mut idx = 0usize;
        let mut zeros = 0u64;
        while idx < self.parts.len() && self.parts[idx] == 0 {
            zeros += 1;
            idx += 1;
        }
        runs.push(zeros);
        for block in &ab.blocks {
            let target: u64 = block.parts.iter().sum();
            let mut group = Vec::new();
            let mut acc = 0u64;
            while acc < target {
                if idx >= self.parts.len() || self.parts[idx] == 0 {
                    return None;
                }
                acc += self.parts[idx];
                group.push(self.parts[idx]);
                idx += 1;
            }
            if acc != target {
                return None;
            }
            groups.push(group);
            let mut zeros = 0u64;
            while idx < self.parts.len() && self.parts[idx] == 0 {
                zeros += 1;
                idx += 1;
            }
            runs.push(zeros);
        }
        if idx != self.parts.len() {
            return None;
        }
        Some((runs, groups))
    }

    /// Refinement order: `self ≤ alpha`. The refining element has zero runs
    /// bounded by `alpha`'s, blockwise descent sets containing `alpha`'s, and
    /// a trailing zero run that is empty exactly when `alpha`'s is.
    pub fn refines(&self, alpha: &Self) -> bool {
        let Some((runs, groups)) = self.align_display(alpha) else {
            return false;
        };
        let ab = alpha.blocks();
        let alpha_runs = ab.zero_runs();
        debug_assert_eq!(runs.len(), alpha_runs.len());
        for (j, i) in runs.iter().zip(&alpha_runs) {
            if j > i {
                return false;
            }
        }
        // Trailing runs must vanish together.
        if *alpha_runs.last().unwrap() >= 1 && *runs.last().unwrap() == 0 {
            return false;
        }
        // Each aligned group must refine the corresponding block: its partial
        // sums must contain the block's partial sums.
        for (group, block) in groups.iter().zip(&ab.blocks) {
            let mut fine = BTreeSet::new();
            let mut acc = 0u64;
            for &p in group {
                acc += p;
                fine.insert(acc);
            }
            let mut acc = 0u64;
            for &p in &block.parts {
                acc += p;
                if !fine.contains(&acc) {
                    return false;
                }
            }
        }
        true
    }

    /// The canonical representative of the peak-class of `self`: same zero
    /// runs, same block weights, same peak set, with each block's descent set
    /// rebuilt minimally from the peaks.
    pub fn canonical_form(&self) -> Self {
        let peaks = self.peak_set();
        let tw = self.total_weight();
        let structure = self.blocks();
        let mut parts: Vec<u64> = vec![0; structure.leading_zeros as usize];
        for block in &structure.blocks {
            let (c, d) = (block.start, block.end);
            let in_block: BTreeSet<u64> =
                peaks.range(c + 1..=d).copied().collect();
            let mut descents: BTreeSet<u64> = in_block.clone();
            if in_block.contains(&d) || d == tw {
                descents.insert(d);
            } else {
                let p = in_block.iter().next_back().copied().unwrap_or(c);
                descents.extend(p + 1..=d);
            }
            let mut prev = c;
            for &desc in &descents {
                debug_assert!(desc > prev, "canonical_form: nonpositive gap");
                parts.push(desc - prev);
                prev = desc;
            }
            parts.extend(std::iter::repeat(0).take(block.trailing_zeros as usize));
        }
        let result = WeakComposition::new(parts);
        assert_eq!(
            result.peak_set(),
            peaks,
            "canonical_form: internal inconsistency (peak set changed) for {self}"
        );
        let rs = result.blocks();
        assert_eq!(
            rs.zero_runs(),
            structure.zero_runs(),
            "canonical_form: internal inconsistency (zero runs changed) for {self}"
        );
        assert!(
            rs.blocks
                .iter()
                .zip(&structure.blocks)
                .all(|(a, b)| a.parts.iter().sum::<u64>() == b.parts.iter().sum::<u64>()),
            "canonical_form: internal inconsistency (block weights changed) for {self}"
        );
        result
    }

    /// All weak compositions of weight `n` with at most `max_zero_length`
    /// zero parts, in the canonical order.
    pub fn enumerate(n: u64, max_zero_length: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for z in 0..=max_zero_length {
            out.extend(Self::enumerate_exact_zeros(n, z));
        }
        out.sort();
        out
    }

    /// All weak compositions of weight `n` with exactly `zeros` zero parts.
    pub fn enumerate_exact_zeros(n: u64, zeros: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for gamma in Self::compositions(n) {
            let mut buf: Vec<u64> = Vec::with_capacity(gamma.length() + zeros);
            interleave_zeros(gamma.parts(), zeros, &mut buf, &mut out);
        }
        out
    }

    /// All weak compositions with `total_weight` equal to `total`.
    pub fn enumerate_total(total: u64) -> Vec<Self> {
        let mut out = Vec::new();
        for w in 0..=total {
            out.extend(Self::enumerate_exact_zeros(w, (total - w) as usize));
        }
        out.sort();
        out
    }

    /// All weak compositions with `total_weight <= bound`.
    pub fn enumerate_up_to_total(bound: u64) -> Vec<Self> {
        let mut out = Vec::new();
        for t in 0..=bound {
            out.extend(Self::enumerate_total(t));
        }
        out.sort();
        out
    }

    /// All (strict) compositions of `n`, i.e. zero-free weak compositions.
    pub fn compositions(n: u64) -> Vec<Self> {
        fn go(rest: u64, prefix: &mut Vec<u64>, out: &mut Vec<WeakComposition>) {
            if rest == 0 {
                out.push(WeakComposition::new(prefix.clone()));
                return;
            }
            for first in 1..=rest {
                prefix.push(first);
                go(rest - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

fn interleave_zeros(
    parts: &[u64],
    zeros: usize,
    buf: &mut Vec<u64>,
    out: &mut Vec<WeakComposition>,
) {
    if parts.is_empty() && zeros == 0 {
        out.push(WeakComposition::new(buf.clone()));
        return;
    }
    if let Some((&first, rest)) = parts.split_first() {
        buf.push(first);
        interleave_zeros(rest, zeros, buf, out);
        buf.pop();
    }
    if zeros > 0 {
        buf.push(0);
        interleave_zeros(parts, zeros - 1, buf, out);
        buf.pop();
    }
}

impl Ord for WeakComposition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.total_weight().cmp(&other.total_weight()))
            .then_with(|| self.length().cmp(&other.length()))
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for WeakComposition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "e");
        }
        let text: Vec<String> = self.parts.iter().map(u64::to_string).collect();
        write!(f, "{}", text.join(","))
    }
}

impl fmt::Debug for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "wc[{self}]")
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WcParseError {
    #[error("empty weak composition literal (use `e` for the empty composition)")]
    Empty,
    #[error("invalid part `{0}` in weak composition literal")]
    InvalidPart(String),
}

impl FromStr for WeakComposition {
    type Err = WcParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let text = text.trim();
        if text.is_empty() {
            return Err(WcParseError::Empty);
        }
        if text == "e" {
            return Ok(WeakComposition::empty());
        }
        let mut parts = Vec::new();
        for token in text.split(',') {
            let token = token.trim();
            let part: u64 = token
                .parse()
                .map_err(|_| WcParseError::InvalidPart(token.to_string()))?;
            parts.push(part);
        }
        Ok(WeakComposition::new(parts))
    }
}
