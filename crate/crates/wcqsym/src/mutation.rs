//! Mutation decompositions of weak compositions.
//!
//! A mutation of `α` arises from splitting each positive part into an ordered
//! list of positive pieces and then cutting the resulting sequence of pieces
//! and zeros into consecutive nonempty segments, such that two pieces of one
//! part never share a segment and every segment, read as a value sequence, has
//! the shape `(1^i, 0^j)` or `(1^i, 0^j, k)` — equivalently, an empty peak
//! set. The mutation is the sequence of segment weights, and its multiplicity
//! counts the (split, cut) pairs producing it.
//!
//! A decomposition is *clean* unless some split part's last piece has value 1,
//! is the sole positive content of its segment, and the next segment has
//! positive weight. `β ⊩ α` means some decomposition of `α` onto `β` is clean.

use std::collections::HashMap;
use std::rc::Rc;

use crate::wc::WeakComposition;

/// Multiplicities of one mutation: all (split, cut) pairs, and the clean ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MutationEntry {
    pub total: u64,
    pub clean: u64,
}

/// Scan position: `idx` indexes the parts of `α`; `rem` is what is left of a
/// positive part (zero parts carry `rem = 0` and are consumed whole).
type State = (usize, u64);

/// One admissible segment: its weight, the position after it, and whether it
/// ends in the dangerous configuration (sole positive content is the value-1
/// last piece of a split part).
struct Segment {
    weight: u64,
    next: State,
    dangerous: bool,
}

fn full(parts: &[u64], idx: usize) -> State {
    (idx, parts.get(idx).copied().unwrap_or(0))
}

/// Enumerate every admissible segment starting at `state`. Each distinct
/// segment content is produced exactly once: ones are consumed first, then
/// zeros, then an optional final piece, and a final piece of value 1 is only
/// admitted after zeros (otherwise it would re-parse a pure run of ones).
fn segments(parts: &[u64], state: State) -> Vec<Segment> {
    let mut out = Vec::new();
    ones(parts, state, 0, false, &mut out);
    out
}

fn ones(parts: &[u64], state: State, weight: u64, danger: bool, out: &mut Vec<Segment>) {
    if weight >= 1 {
        out.push(Segment { weight, next: state, dangerous: danger && weight == 1 });
    }
    let (idx, rem) = state;
    if idx >= parts.len() {
        return;
    }
    let value = parts[idx];
    if value == 0 {
        zeros(parts, full(parts, idx + 1), weight, danger, out);
        return;
    }
    // Take a piece of value 1.
    if rem == 1 {
        // Exhausts the part; dangerous when the part was split earlier.
        ones(parts, full(parts, idx + 1), weight + 1, danger || value > 1, out);
    } else {
        // The part keeps a remainder for later segments, so the segment must
        // end right after this piece.
        out.push(Segment { weight: weight + 1, next: (idx, rem - 1), dangerous: danger && weight + 1 == 1 });
    }
    // Final piece of value >= 2.
    for piece in 2..=rem {
        let next = if piece == rem { full(parts, idx + 1) } else { (idx, rem - piece) };
        out.push(Segment { weight: weight + piece, next, dangerous: false });
    }
}

fn zeros(parts: &[u64], state: State, weight: u64, danger: bool, out: &mut Vec<Segment>) {
    out.push(Segment { weight, next: state, dangerous: danger && weight == 1 });
    let (idx, rem) = state;
    if idx >= parts.len() {
        return;
    }
    let value = parts[idx];
    if value == 0 {
        zeros(parts, full(parts, idx + 1), weight, danger, out);
        return;
    }
    // Final piece after zeros; value 1 is admissible here.
    for piece in 1..=rem {
        let unit_danger = piece == 1 && rem == 1 && value > 1;
        let next = if piece == rem { full(parts, idx + 1) } else { (idx, rem - piece) };
        let total = weight + piece;
        out.push(Segment {
            weight: total,
            next,
            dangerous: (danger || unit_danger) && total == 1,
        });
    }
}

type SuffixCounts = Rc<HashMap<Vec<u64>, (u64, u64)>>; // (clean, violated)

fn walk(
    parts: &[u64],
    state: State,
    prev_danger: bool,
    memo: &mut HashMap<(usize, u64, bool), SuffixCounts>,
) -> SuffixCounts {
    let key = (state.0, state.1, prev_danger);
    if let Some(cached) = memo.get(&key) {
        return Rc::clone(cached);
    }
    let mut acc: HashMap<Vec<u64>, (u64, u64)> = HashMap::new();
    if state.0 >= parts.len() {
        acc.insert(Vec::new(), (1, 0));
    } else {
        for seg in segments(parts, state) {
            let violated_now = prev_danger && seg.weight >= 1;
            let sub = walk(parts, seg.next, seg.dangerous, memo);
            for (suffix, &(clean, violated)) in sub.iter() {
                let mut beta = Vec::with_capacity(suffix.len() + 1);
                beta.push(seg.weight);
                beta.extend_from_slice(suffix);
                let entry = acc.entry(beta).or_insert((0, 0));
                if violated_now {
                    entry.1 += clean + violated;
                } else {
                    entry.0 += clean;
                    entry.1 += violated;
                }
            }
        }
    }
    let rc = Rc::new(acc);
    memo.insert(key, Rc::clone(&rc));
    rc
}

/// All mutations of `α` with their multiplicities.
pub fn mutation_table(alpha: &WeakComposition) -> std::collections::BTreeMap<WeakComposition, MutationEntry> {
    let parts = alpha.parts();
    let mut memo = HashMap::new();
    let counts = walk(parts, full(parts, 0), false, &mut memo);
    counts
        .iter()
        .map(|(beta, &(clean, violated))| {
            (
                WeakComposition::new(beta.clone()),
                MutationEntry { total: clean + violated, clean },
            )
        })
        .collect()
}

/// The number of (split, cut) pairs decomposing `α` onto `β`; zero when
/// `β` is not a mutation of `α`.
pub fn mutation_multiplicity(alpha: &WeakComposition, beta: &WeakComposition) -> u64 {
    mutation_table(alpha)
        .get(beta)
        .map_or(0, |entry| entry.total)
}

/// `β ⊴ α`: β is a mutation of α.
pub fn is_mutation(beta: &WeakComposition, alpha: &WeakComposition) -> bool {
    mutation_multiplicity(alpha, beta) > 0
}

/// `β ⊩ α`: some decomposition of α onto β is clean.
pub fn vdash(beta: &WeakComposition, alpha: &WeakComposition) -> bool {
    mutation_table(alpha)
        .get(beta)
        .map_or(false, |entry| entry.clean > 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn wc(parts: &[u64]) -> WeakComposition {
        WeakComposition::new(parts.to_vec())
    }

    fn totals(alpha: &WeakComposition) -> BTreeMap<WeakComposition, u64> {
        mutation_table(alpha)
            .into_iter()
            .map(|(beta, entry)| (beta, entry.total))
            .collect()
    }

    #[test]
    fn empty_composition_has_one_trivial_mutation() {
        let table = mutation_table(&WeakComposition::empty());
        assert_eq!(table.len(), 1);
        assert_eq!(
            table[&WeakComposition::empty()],
            MutationEntry { total: 1, clean: 1 }
        );
    }

    #[test]
    fn small_tables() {
        assert_eq!(
            totals(&wc(&[0, 1])),
            BTreeMap::from([(wc(&[1]), 1), (wc(&[0, 1]), 1)])
        );
        assert_eq!(
            totals(&wc(&[2])),
            BTreeMap::from([(wc(&[2]), 1), (wc(&[1, 1]), 1)])
        );
    }

    #[test]
    fn multiplicity_three_example() {
        let alpha = wc(&[0, 0, 4, 0, 0, 2, 0, 0, 1, 0, 1]);
        let beta = wc(&[2, 1, 3, 0, 1, 1]);
        assert_eq!(mutation_multiplicity(&alpha, &beta), 3);
    }

    #[test]
    fn self_mutation_is_unit_and_clean() {
        for alpha in WeakComposition::enumerate_up_to_total(5) {
            let table = mutation_table(&alpha);
            let entry = table.get(&alpha).expect("α ⊴ α must hold");
            assert_eq!(entry.total, 1, "n_αα must be 1 for {alpha}");
            assert!(entry.clean >= 1, "α ⊩ α must hold for {alpha}");
            assert!(vdash(&alpha, &alpha));
        }
    }

    #[test]
    fn compositions_have_multiplicity_at_most_one() {
        for n in 0..=6u64 {
            for alpha in WeakComposition::compositions(n) {
                for (beta, entry) in mutation_table(&alpha) {
                    assert!(
                        entry.total <= 1,
                        "n_{{αβ}} > 1 for composition α={alpha}, β={beta}"
                    );
                }
            }
        }
    }

    #[test]
    fn vdash_examples() {
        let alpha = wc(&[0, 0, 5, 0, 0, 2]);
        let beta = wc(&[0, 2, 2, 1, 0, 2]);
        let gamma = wc(&[0, 2, 2, 1, 2]);
        assert!(is_mutation(&beta, &alpha));
        assert!(vdash(&beta, &alpha));
        assert!(is_mutation(&gamma, &alpha));
        assert!(!vdash(&gamma, &alpha));
    }

    #[test]
    fn mutations_preserve_weight_and_never_exceed_cell_count() {
        for alpha in WeakComposition::enumerate_up_to_total(5) {
            for (beta, entry) in mutation_table(&alpha) {
                assert!(entry.total >= 1);
                assert_eq!(beta.weight(), alpha.weight(), "weight must be preserved");
                assert!(
                    beta.total_weight() <= alpha.total_weight(),
                    "segments cannot outnumber cells: {alpha} -> {beta}"
                );
                assert!(entry.clean <= entry.total);
            }
        }
    }
}
