//! Brute-force ground truth: truncated formal power series whose monomials
//! carry explicit zero exponents, together with direct enumeration of the
//! chain partitions that the fundamental and peak symbols abbreviate.
//!
//! Everything here is deliberately naive. The algebraic modules compute
//! through combinatorial formulas; this module recomputes the same objects
//! by listing maps one at a time, so the two routes check each other. A
//! truncation to `vars` variables is exact for deciding equality whenever
//! `vars` is at least the longest index in either support, so comparisons at
//! a fixed small `vars` settle identities between elements of bounded length.

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;

use crate::element::Element;
use crate::expand::{expand_k_to_m, to_m};
use crate::scalar::{self, Scalar};
use crate::wc::WeakComposition;
use crate::word::{poset_word, PosetWord};

/// A monomial in variables `x1, x2, ...` with exponents in ℕ.
///
/// An entry with exponent 0 is meaningful and is never dropped: `x1^0`
/// records that variable 1 occurs (a zero part landed there), which is
/// different from variable 1 not occurring at all. Multiplication adds
/// exponents on shared variables, so `x1^0 * x1^0 = x1^0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial {
    exponents: BTreeMap<u64, u64>,
}

impl Monomial {
    /// The empty monomial (the constant 1).
    pub fn one() -> Self {
        Monomial { exponents: BTreeMap::new() }
    }

    pub fn from_exponents(exponents: impl IntoIterator<Item = (u64, u64)>) -> Self {
        let mut m = Monomial::one();
        for (var, exp) in exponents {
            m.push_factor(var, exp);
        }
        m
    }

    /// Sorted `(variable, exponent)` pairs, explicit zeros included.
    pub fn exponents(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.exponents.iter().map(|(&v, &e)| (v, e))
    }

    /// Multiply by `x_var^exp` in place; exponents add and 0 + 0 stays 0.
    pub fn push_factor(&mut self, var: u64, exp: u64) {
        assert!(var >= 1, "variable indices start at 1");
        *self.exponents.entry(var).or_insert(0) += exp;
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (var, exp) in other.exponents() {
            out.push_factor(var, exp);
        }
        out
    }

    fn max_var(&self) -> u64 {
        self.exponents.keys().next_back().copied().unwrap_or(0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        for (n, (var, exp)) in self.exponents.iter().enumerate() {
            if n > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{var}^{exp}")?;
        }
        Ok(())
    }
}

/// A polynomial truncation of a formal power series: only monomials in
/// `x1..=x{vars}` are representable, and series agree here exactly when
/// their full counterparts agree after killing all higher variables.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    vars: u64,
    terms: BTreeMap<Monomial, Scalar>,
}

impl TruncatedSeries {
    pub fn zero(vars: u64) -> Self {
        TruncatedSeries { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: u64) -> Self {
        let mut s = TruncatedSeries::zero(vars);
        s.add_term(Monomial::one(), scalar::int(1));
        s
    }

    pub fn vars(&self) -> u64 {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    /// Add `coeff * monomial`, dropping the term if the total vanishes.
    pub fn add_term(&mut self, monomial: Monomial, coeff: Scalar) {
        assert!(
            monomial.max_var() <= self.vars,
            "monomial {monomial} exceeds truncation to {} variables",
            self.vars
        );
        let slot = self.terms.entry(monomial).or_insert_with(Scalar::zero);
        *slot += coeff;
        if slot.is_zero() {
            let dead: Vec<Monomial> = self
                .terms
                .iter()
                .filter(|(_, c)| c.is_zero())
                .map(|(m, _)| m.clone())
                .collect();
            for m in dead {
                self.terms.remove(&m);
            }
        }
    }

    pub fn add(mut self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.vars, other.vars, "add: mismatched truncations");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
        self
    }

    pub fn scale(mut self, factor: &Scalar) -> TruncatedSeries {
        if factor.is_zero() {
            self.terms.clear();
            return self;
        }
        for c in self.terms.values_mut() {
            *c *= factor;
        }
        self
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (monomial, coeff)) in self.terms.iter().enumerate() {
            let negative = coeff < &Scalar::zero();
            if n == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}*{}", scalar::render(&scalar::abs(coeff)), monomial)?;
        }
        Ok(())
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Multiply two series over the same variable range.
pub fn series_product(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    assert_eq!(
        a.vars, b.vars,
        "series_product: mismatched truncations ({} vs {} variables)",
        a.vars, b.vars
    );
    let mut out = TruncatedSeries::zero(a.vars);
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            out.add_term(ma.mul(mb), ca * cb);
        }
    }
    out
}

/// The monomial symbol as an actual polynomial: the sum over all strictly
/// increasing variable tuples `i_1 < ... < i_l` in `[1..=vars]` of
/// `x_{i_1}^{a_1} ... x_{i_l}^{a_l}`, zero parts contributing explicit zero
/// exponents. A key longer than `vars` realizes to the zero series.
pub fn realize_m(alpha: &WeakComposition, vars: u64) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(vars);
    let parts = alpha.parts();
    let len = parts.len() as u64;
    if len > vars {
        return out;
    }
    let mut chosen: Vec<u64> = Vec::with_capacity(parts.len());
    fn rec(
        parts: &[u64],
        vars: u64,
        next_var: u64,
        chosen: &mut Vec<u64>,
        out: &mut TruncatedSeries,
    ) {
        if chosen.len() == parts.len() {
            let monomial = Monomial::from_exponents(
                chosen.iter().copied().zip(parts.iter().copied()),
            );
            out.add_term(monomial, scalar::int(1));
            return;
        }
        let remaining = (parts.len() - chosen.len()) as u64;
        for var in next_var..=(vars + 1 - remaining) {
            chosen.push(var);
            rec(parts, vars, var + 1, chosen, out);
            chosen.pop();
        }
    }
    rec(parts, vars, 1, &mut chosen, &mut out);
    out
}

/// Realize any element as a truncated series by expanding it into monomial
/// symbols first.
pub fn realize(x: &Element, vars: u64) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(vars);
    for (alpha, coeff) in to_m(x).terms() {
        out = out.add(&realize_m(alpha, vars).scale(coeff));
    }
    out
}

/// Value ranks for enriched maps: the target values are ordered
/// `-1 ≺ 1 ≺ -2 ≺ 2 ≺ ...`, so rank `r` stands for the value with absolute
/// part `r/2 + 1`, negative when `r` is even.
fn rank_var(rank: u64) -> u64 {
    rank / 2 + 1
}

fn rank_positive(rank: u64) -> bool {
    rank % 2 == 1
}

/// Enumerate the enriched partitions of a labeled chain word into the values
/// `-1 ≺ 1 ≺ -2 ≺ 2 ≺ ... ≺ -vars ≺ vars` and sum their weights.
///
/// A map is admissible when it is weakly increasing in the value order and,
/// at each step where consecutive letters share a value, the shared value's
/// sign matches the labels: equal positive values need an ascent
/// (`label_i < label_{i+1}`), equal negative values need a descent. Each
/// letter contributes `x_{|value|}` with exponent 0 if barred, 1 otherwise.
pub fn enumerate_enriched(word: &PosetWord, vars: u64) -> TruncatedSeries {
    let letters = word.letters();
    let mut out = TruncatedSeries::zero(vars);
    let mut monomial = Monomial::one();
    fn rec(
        letters: &[crate::word::Letter],
        pos: usize,
        min_rank: u64,
        vars: u64,
        monomial: &mut Monomial,
        out: &mut TruncatedSeries,
    ) {
        if pos == letters.len() {
            out.add_term(monomial.clone(), scalar::int(1));
            return;
        }
        for rank in min_rank..2 * vars {
            if pos > 0 && rank == min_rank {
                // Staying on the previous value: admissible only when the
                // sign agrees with the label step.
                let ascent = letters[pos - 1].label < letters[pos].label;
                if rank_positive(rank) != ascent {
                    continue;
                }
            }
            let var = rank_var(rank);
            let exp = if letters[pos].barred { 0 } else { 1 };
            let saved = monomial.clone();
            monomial.push_factor(var, exp);
            rec(letters, pos + 1, rank, vars, monomial, out);
            *monomial = saved;
        }
    }
    rec(letters, 0, 0, vars, &mut monomial, &mut out);
    out
}

/// Enumerate the ordinary partitions of a labeled chain word: weakly
/// increasing maps into `1..=vars`, strictly increasing across each label
/// descent, with the same barred/unbarred exponent rule.
pub fn enumerate_ordinary(word: &PosetWord, vars: u64) -> TruncatedSeries {
    let letters = word.letters();
    let mut out = TruncatedSeries::zero(vars);
    let mut monomial = Monomial::one();
    fn rec(
        letters: &[crate::word::Letter],
        pos: usize,
        min_value: u64,
        vars: u64,
        monomial: &mut Monomial,
        out: &mut TruncatedSeries,
    ) {
        if pos == letters.len() {
            out.add_term(monomial.clone(), scalar::int(1));
            return;
        }
        for value in min_value..=vars {
            if pos > 0 && value == min_value && letters[pos - 1].label > letters[pos].label {
                continue;
            }
            let exp = if letters[pos].barred { 0 } else { 1 };
            let saved = monomial.clone();
            monomial.push_factor(value, exp);
            rec(letters, pos + 1, value, vars, monomial, out);
            *monomial = saved;
        }
    }
    rec(letters, 0, 1, vars, &mut monomial, &mut out);
    out
}

/// The structural equality test for peak symbols: same zero runs, same block
/// weights, same peak set. Two keys pass exactly when they share a canonical
/// form.
pub fn peak_class_equal(a: &WeakComposition, b: &WeakComposition) -> bool {
    a.canonical_form() == b.canonical_form()
}

/// One pair where the structural test and the enumerated series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArbitrationFinding {
    pub first: WeakComposition,
    pub second: WeakComposition,
    pub criterion_equal: bool,
    pub oracle_equal: bool,
}

/// The verdict on one distinguished pair, decided through the exact monomial
/// expansion rather than a truncated enumeration (the pair is too long for
/// direct enumeration to stay cheap).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShowcaseVerdict {
    pub first: WeakComposition,
    pub second: WeakComposition,
    pub first_peaks: Vec<u64>,
    pub second_peaks: Vec<u64>,
    pub criterion_equal: bool,
    pub expansion_equal: bool,
    /// Number of monomial symbols in the difference of the two expansions.
    pub difference_terms: usize,
}

/// Outcome of sweeping every pair of weak compositions up to a total-weight
/// bound: the structural equality test against series equality.
#[derive(Clone, Debug)]
pub struct ArbitrationReport {
    pub bound: u64,
    pub vars: u64,
    pub keys_checked: usize,
    pub pairs_checked: u64,
    pub discrepancies: Vec<ArbitrationFinding>,
    /// Whether series equality behaved as an equivalence relation
    /// (reflexive, symmetric, transitive) on the swept keys.
    pub equivalence_consistent: bool,
    pub showcase: ShowcaseVerdict,
}

impl ArbitrationReport {
    pub fn agreement_rate(&self) -> (u64, u64) {
        (self.pairs_checked - self.discrepancies.len() as u64, self.pairs_checked)
    }
}

impl fmt::Display for ArbitrationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (agree, total) = self.agreement_rate();
        writeln!(
            f,
            "arbitration: {} keys (total weight <= {}), {} pairs, series truncated to {} variables",
            self.keys_checked, self.bound, total, self.vars
        )?;
        writeln!(f, "criterion-vs-oracle agreement: {agree}/{total}")?;
        writeln!(
            f,
            "series equality is an equivalence relation: {}",
            self.equivalence_consistent
        )?;
        for d in &self.discrepancies {
            writeln!(
                f,
                "  discrepancy: {} vs {} (criterion {}, oracle {})",
                d.first, d.second, d.criterion_equal, d.oracle_equal
            )?;
        }
        let s = &self.showcase;
        writeln!(
            f,
            "showcase pair: [{}] vs [{}] -- peaks {:?} vs {:?}",
            s.first, s.second, s.first_peaks, s.second_peaks
        )?;
        write!(
            f,
            "  criterion says {}, exact expansion says {} ({} symbols differ)",
            if s.criterion_equal { "equal" } else { "not equal" },
            if s.expansion_equal { "equal" } else { "not equal" },
            s.difference_terms
        )
    }
}

/// A pair sometimes quoted as an equality of peak enumerators: block weights
/// and zero runs match, but the peak sets differ by a shift at the right
/// boundary, and the exact expansions differ. The arbitration report carries
/// its verdict so the record is explicit.
pub fn showcase_pair() -> (WeakComposition, WeakComposition) {
    (
        WeakComposition::new(vec![0, 0, 3, 0, 0, 2, 0, 0, 1, 1]),
        WeakComposition::new(vec![0, 0, 1, 2, 0, 0, 2, 0, 0, 2]),
    )
}

fn showcase_verdict() -> ShowcaseVerdict {
    let (first, second) = showcase_pair();
    let ea = expand_k_to_m(&first);
    let eb = expand_k_to_m(&second);
    let difference = ea.clone().sub(&eb);
    ShowcaseVerdict {
        first_peaks: first.peak_set().into_iter().collect(),
        second_peaks: second.peak_set().into_iter().collect(),
        criterion_equal: peak_class_equal(&first, &second),
        expansion_equal: difference.is_zero(),
        difference_terms: difference.len(),
        first,
        second,
    }
}

/// Sweep all pairs of weak compositions with total weight at most `bound`,
/// comparing the structural equality test against equality of enumerated
/// series truncated to `vars` variables. Disagreements become findings, not
/// failures: the report records both sides.
pub fn arbitrate(bound: u64, vars: u64) -> ArbitrationReport {
    let keys = WeakComposition::enumerate_up_to_total(bound);
    let series: Vec<TruncatedSeries> = keys
        .iter()
        .map(|alpha| enumerate_enriched(&poset_word(alpha), vars))
        .collect();
    let mut pairs_checked = 0u64;
    let mut discrepancies = Vec::new();
    let n = keys.len();
    let mut equal = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            equal[i][j] = series[i] == series[j];
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            pairs_checked += 1;
            let criterion = peak_class_equal(&keys[i], &keys[j]);
            if criterion != equal[i][j] {
                discrepancies.push(ArbitrationFinding {
                    first: keys[i].clone(),
                    second: keys[j].clone(),
                    criterion_equal: criterion,
                    oracle_equal: equal[i][j],
                });
            }
        }
    }
    let mut consistent = true;
    for i in 0..n {
        consistent &= equal[i][i];
        for j in 0..n {
            consistent &= equal[i][j] == equal[j][i];
            if equal[i][j] {
                for k in 0..n {
                    if equal[j][k] && !equal[i][k] {
                        consistent = false;
                    }
                }
            }
        }
    }
    ArbitrationReport {
        bound,
        vars,
        keys_checked: n,
        pairs_checked,
        discrepancies,
        equivalence_consistent: consistent,
        showcase: showcase_verdict(),
    }
}
