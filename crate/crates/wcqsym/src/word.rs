//! Labeled chain words backing the F and K bases.
//!
//! Every weak composition `α` determines a totally ordered, labeled chain:
//! its cells in order, zero cells carrying *barred* labels `1..ℓ₀` assigned
//! left to right, and the cells of the positive parts carrying unbarred
//! labels `ℓ₀+1..ℓ₀+|α|`, handed out to the parts from the last part
//! backwards, ascending within each part. Products and the series oracle work
//! directly on these words: shuffling two label-disjoint words and rewriting
//! each shuffle back into basis elements multiplies the corresponding
//! fundamental or peak functions.

use crate::element::{Basis, Element};
use crate::scalar::{self, Scalar};
use crate::wc::WeakComposition;

/// One letter of a chain word: a distinct label, barred (zero cell) or not.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Letter {
    pub label: u64,
    pub barred: bool,
}

/// A labeled chain word. Labels are pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetWord {
    letters: Vec<Letter>,
}

impl PosetWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        let mut seen: Vec<u64> = letters.iter().map(|l| l.label).collect();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), letters.len(), "PosetWord: labels must be distinct");
        PosetWord { letters }
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

    /// Shift barred and unbarred labels by separate offsets.
    pub fn shift(&self, barred_shift: u64, unbarred_shift: u64) -> PosetWord {
        PosetWord {
            letters: self
                .letters
                .iter()
                .map(|l| Letter {
                    label: l.label + if l.barred { barred_shift } else { unbarred_shift },
                    barred: l.barred,
                })
                .collect(),
        }
    }

    /// Feed every interleaving of `self` and `other` to `f`. Labels of the
    /// two words must be disjoint.
    pub fn for_each_shuffle(&self, other: &PosetWord, mut f: impl FnMut(&[Letter])) {
        let mut labels: Vec<u64> = self
            .letters
            .iter()
            .chain(&other.letters)
            .map(|l| l.label)
            .collect();
        labels.sort_unstable();
        labels.dedup();
        assert_eq!(
            labels.len(),
            self.len() + other.len(),
            "for_each_shuffle: words must have disjoint labels"
        );
        let mut buf: Vec<Letter> = Vec::with_capacity(self.len() + other.len());
        shuffle_rec(&self.letters, &other.letters, &mut buf, &mut f);
    }
}

fn shuffle_rec(a: &[Letter], b: &[Letter], buf: &mut Vec<Letter>, f: &mut impl FnMut(&[Letter])) {
    if a.is_empty() && b.is_empty() {
        f(buf);
        return;
    }
    if let Some((&first, rest)) = a.split_first() {
        buf.push(first);
        shuffle_rec(rest, b, buf, f);
        buf.pop();
    }
    if let Some((&first, rest)) = b.split_first() {
        buf.push(first);
        shuffle_rec(a, rest, buf, f);
        buf.pop();
    }
}

/// The labeled chain word of a weak composition.
pub fn poset_word(alpha: &WeakComposition) -> PosetWord {
    let zero_len = alpha.zero_length() as u64;
    // Unbarred labels: positive parts receive consecutive ascending ranges,
    // assigned from the last positive part backwards.
    let positives: Vec<u64> = alpha.parts().iter().copied().filter(|&p| p > 0).collect();
    let mut part_base = vec![0u64; positives.len()];
    let mut next = zero_len;
    for (q, &p) in positives.iter().enumerate().rev() {
        part_base[q] = next;
        next += p;
    }
    let mut letters = Vec::with_capacity(alpha.total_weight() as usize);
    let mut zero_label = 0u64;
    let mut part_index = 0usize;
    for &part in alpha.parts() {
        if part == 0 {
            zero_label += 1;
            letters.push(Letter { label: zero_label, barred: true });
        } else {
            let base = part_base[part_index];
            for offset in 1..=part {
                letters.push(Letter { label: base + offset, barred: false });
            }
            part_index += 1;
        }
    }
    PosetWord::new(letters)
}

/// The descent composition of a label sequence: maximal ascending runs.
fn descent_composition(labels: &[u64]) -> Vec<u64> {
    let mut parts = Vec::new();
    let mut run = 0u64;
    for (n, &label) in labels.iter().enumerate() {
        run += 1;
        let descent = labels.get(n + 1).map_or(true, |&next| label > next);
        if descent {
            parts.push(run);
            run = 0;
        }
    }
    parts
}

enum Run {
    /// A maximal unbarred run: fixed positive parts.
    Fixed(Vec<u64>),
    /// A maximal barred run: a formal sum of zero runs with coefficients.
    Choice(Vec<(u64, Scalar)>),
}

fn assert_valid_word(letters: &[Letter]) {
    let max_barred = letters.iter().filter(|l| l.barred).map(|l| l.label).max();
    let min_unbarred = letters.iter().filter(|l| !l.barred).map(|l| l.label).min();
    if let (Some(b), Some(u)) = (max_barred, min_unbarred) {
        assert!(
            b < u,
            "invalid word: barred label {b} not below unbarred label {u}"
        );
    }
}

fn rewrite(letters: &[Letter], basis: Basis) -> Element {
    assert_valid_word(letters);
    let mut runs: Vec<Run> = Vec::new();
    let mut idx = 0usize;
    while idx < letters.len() {
        let barred = letters[idx].barred;
        let mut labels = Vec::new();
        while idx < letters.len() && letters[idx].barred == barred {
            labels.push(letters[idx].label);
            idx += 1;
        }
        let gamma = descent_composition(&labels);
        let n = labels.len() as u64;
        if !barred {
            runs.push(Run::Fixed(gamma));
            continue;
        }
        let choices = match basis {
            Basis::K => {
                let p = WeakComposition::new(gamma).peak_set().len() as i64;
                (0..=p)
                    .map(|k| {
                        let coeff = if k % 2 == 0 { scalar::int(1) } else { scalar::int(-1) };
                        (n - 2 * k as u64, coeff * scalar::binom(p, k))
                    })
                    .collect()
            }
            Basis::F => {
                let l = gamma.len() as i64;
                (0..l)
                    .map(|j| {
                        let coeff = if j % 2 == 0 { scalar::int(1) } else { scalar::int(-1) };
                        (n - j as u64, coeff * scalar::binom(l - 1, j))
                    })
                    .collect()
            }
            Basis::M => unreachable!("rewrite targets F or K only"),
        };
        runs.push(Run::Choice(choices));
    }
    let mut out = Element::zero(basis);
    assemble(&runs, &mut Vec::new(), scalar::int(1), &mut out);
    out
}

fn assemble(runs: &[Run], prefix: &mut Vec<u64>, coeff: Scalar, out: &mut Element) {
    use num::Zero;
    if coeff.is_zero() {
        return;
    }
    match runs.split_first() {
        None => out.add_term(WeakComposition::new(prefix.clone()), coeff),
        Some((Run::Fixed(parts), rest)) => {
            let len = parts.len();
            prefix.extend_from_slice(parts);
            assemble(rest, prefix, coeff, out);
            prefix.truncate(prefix.len() - len);
        }
        Some((Run::Choice(choices), rest)) => {
            for (zeros, factor) in choices {
                let len = *zeros as usize;
                prefix.extend(std::iter::repeat(0).take(len));
                assemble(rest, prefix, &coeff * factor, out);
                prefix.truncate(prefix.len() - len);
            }
        }
    }
}

/// Rewrite a chain word as a combination of fundamental symbols. The word
/// must place every barred label below every unbarred label.
pub fn word_to_f(letters: &[Letter]) -> Element {
    rewrite(letters, Basis::F)
}

/// Rewrite a chain word as a combination of peak symbols (keys canonical).
/// The word must place every barred label below every unbarred label.
pub fn word_to_k(letters: &[Letter]) -> Element {
    rewrite(letters, Basis::K)
}
