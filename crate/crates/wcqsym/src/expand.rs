//! Basis expansions and closed forms.
//!
//! The monomial basis `M` is the computational ground floor: `F` expands into
//! `M` over the refinement order with products of zero-run binomials, `K`
//! expands into `M` over mutations with powers of 2, and the reverse
//! directions are obtained by sign-twisted refinement sums (`M` into `F`) or
//! by composition (`K` into `F`). Closed forms for products and expansions of
//! all-zero symbols, and for the fully-barred chain of a zero-free
//! composition, are provided alongside and cross-checked against the generic
//! routes in tests.

use std::collections::{BTreeMap, HashMap};

use num::Zero;
use thiserror::Error;

use crate::element::{Basis, Element};
use crate::mutation::{self, MutationEntry};
use crate::scalar::{self, Scalar};
use crate::wc::WeakComposition;

/// Quasi-shuffle of two weak compositions: interleave parts in order, with an
/// optional merge of the two current heads weighted by `lambda`. `lambda = 0`
/// is the plain shuffle, `lambda = 1` the quasi-shuffle of monomials.
pub fn quasi_shuffle(
    a: &WeakComposition,
    b: &WeakComposition,
    lambda: &Scalar,
) -> BTreeMap<WeakComposition, Scalar> {
    fn rec(
        a: &[u64],
        b: &[u64],
        lambda: &Scalar,
        prefix: &mut Vec<u64>,
        coeff: Scalar,
        out: &mut BTreeMap<WeakComposition, Scalar>,
    ) {
        if a.is_empty() && b.is_empty() {
            let entry = out
                .entry(WeakComposition::new(prefix.clone()))
                .or_insert_with(Scalar::zero);
            *entry += coeff;
            if entry.is_zero() {
                out.remove(&WeakComposition::new(prefix.clone()));
            }
            return;
        }
        if let Some((&ha, ta)) = a.split_first() {
            prefix.push(ha);
            rec(ta, b, lambda, prefix, coeff.clone(), out);
            prefix.pop();
        }
        if let Some((&hb, tb)) = b.split_first() {
            prefix.push(hb);
            rec(a, tb, lambda, prefix, coeff.clone(), out);
            prefix.pop();
        }
        if !lambda.is_zero() {
            if let (Some((&ha, ta)), Some((&hb, tb))) = (a.split_first(), b.split_first()) {
                prefix.push(ha + hb);
                rec(ta, tb, lambda, prefix, coeff * lambda, out);
                prefix.pop();
            }
        }
    }
    let mut out = BTreeMap::new();
    rec(a.parts(), b.parts(), lambda, &mut Vec::new(), scalar::int(1), &mut out);
    out
}

/// All compositions refining a given composition (concatenations of
/// compositions of each part).
fn composition_refinements(parts: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for &part in parts {
        let pieces: Vec<Vec<u64>> = WeakComposition::compositions(part)
            .into_iter()
            .map(|c| c.parts().to_vec())
            .collect();
        let mut next = Vec::with_capacity(out.len() * pieces.len());
        for prefix in &out {
            for piece in &pieces {
                let mut v = prefix.clone();
                v.extend_from_slice(piece);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Walk all displays `β ≤ α` (interior zero runs `0..=i_p`, trailing run tied
/// to `α`'s, blocks refined), calling `f` with the assembled β, the zero-run
/// binomial product, and β's length.
fn for_each_refinement(alpha: &WeakComposition, mut f: impl FnMut(WeakComposition, Scalar)) {
    let structure = alpha.blocks();
    let runs = structure.zero_runs();
    let k = structure.blocks.len();
    // Per-run choices: (zeros, factor).
    let mut run_choices: Vec<Vec<(u64, Scalar)>> = Vec::with_capacity(k + 1);
    for (p, &i) in runs.iter().enumerate() {
        let i = i as i64;
        let choices: Vec<(u64, Scalar)> = if p == k {
            // Trailing run: vanishes with α's, and carries binom(i-1, j-1).
            if i == 0 {
                vec![(0, scalar::int(1))]
            } else {
                (1..=i).map(|j| (j as u64, scalar::binom(i - 1, j - 1))).collect()
            }
        } else {
            (0..=i).map(|j| (j as u64, scalar::binom(i, j))).collect()
        };
        run_choices.push(choices);
    }
    let block_choices: Vec<Vec<Vec<u64>>> = structure
        .blocks
        .iter()
        .map(|b| composition_refinements(&b.parts))
        .collect();

    fn rec(
        run_choices: &[Vec<(u64, Scalar)>],
        block_choices: &[Vec<Vec<u64>>],
        q: usize,
        prefix: &mut Vec<u64>,
        coeff: Scalar,
        f: &mut impl FnMut(WeakComposition, Scalar),
    ) {
        for (zeros, factor) in &run_choices[q] {
            let c = &coeff * factor;
            if c.is_zero() {
                continue;
            }
            let mark = prefix.len();
            prefix.extend(std::iter::repeat(0).take(*zeros as usize));
            if q == block_choices.len() {
                f(WeakComposition::new(prefix.clone()), c);
            } else {
                for refinement in &block_choices[q] {
                    let inner = prefix.len();
                    prefix.extend_from_slice(refinement);
                    rec(run_choices, block_choices, q + 1, prefix, c.clone(), f);
                    prefix.truncate(inner);
                }
            }
            prefix.truncate(mark);
        }
    }
    rec(&run_choices, &block_choices, 0, &mut Vec::new(), scalar::int(1), &mut f);
}

/// Walk every index obtained from `alpha` by shrinking each zero run to a
/// shorter nonempty run (positive parts untouched, no new runs), calling `f`
/// with the shrunk index and the product of `binom(run−1, shrunk−1)` factors.
/// These are exactly the β with the same positive-part word as `alpha` for
/// which that binomial product does not vanish.
pub fn for_each_zero_contraction(
    alpha: &WeakComposition,
    mut f: impl FnMut(WeakComposition, Scalar),
) {
    enum Run {
        Part(u64),
        Zeros(u64),
    }
    let mut runs: Vec<Run> = Vec::new();
    for &p in alpha.parts() {
        if p > 0 {
            runs.push(Run::Part(p));
        } else if let Some(Run::Zeros(z)) = runs.last_mut() {
            *z += 1;
        } else {
            runs.push(Run::Zeros(1));
        }
    }
    fn rec(
        runs: &[Run],
        q: usize,
        prefix: &mut Vec<u64>,
        coeff: Scalar,
        f: &mut impl FnMut(WeakComposition, Scalar),
    ) {
        if q == runs.len() {
            f(WeakComposition::new(prefix.clone()), coeff);
            return;
        }
        match runs[q] {
            Run::Part(s) => {
                prefix.push(s);
                rec(runs, q + 1, prefix, coeff, f);
                prefix.pop();
            }
            Run::Zeros(z) => {
                for w in 1..=z {
                    let factor = scalar::binom(z as i64 - 1, w as i64 - 1);
                    let mark = prefix.len();
                    prefix.extend(std::iter::repeat(0).take(w as usize));
                    rec(runs, q + 1, prefix, &coeff * &factor, f);
                    prefix.truncate(mark);
                }
            }
        }
    }
    rec(&runs, 0, &mut Vec::new(), scalar::int(1), &mut f);
}

/// `F[α]` as a combination of monomial symbols.
pub fn expand_f_to_m(alpha: &WeakComposition) -> Element {
    let mut out = Element::zero(Basis::M);
    for_each_refinement(alpha, |beta, coeff| out.add_term(beta, coeff));
    out
}

/// `M[α]` as a combination of fundamental symbols.
pub fn expand_m_to_f(alpha: &WeakComposition) -> Element {
    let mut out = Element::zero(Basis::F);
    let len = alpha.length() as i64;
    for_each_refinement(alpha, |beta, coeff| {
        let sign = if (beta.length() as i64 - len) % 2 == 0 {
            scalar::int(1)
        } else {
            scalar::int(-1)
        };
        out.add_term(beta, coeff * sign);
    });
    out
}

/// `K[α]` as a combination of monomial symbols: mutations weighted by
/// multiplicity times `2^(length)`. Memoized per process: the verification
/// suites expand the same keys many thousands of times.
pub fn expand_k_to_m(alpha: &WeakComposition) -> Element {
    static CACHE: std::sync::OnceLock<std::sync::Mutex<HashMap<WeakComposition, Element>>> =
        std::sync::OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(alpha) {
        return hit.clone();
    }
    let mut out = Element::zero(Basis::M);
    for (beta, MutationEntry { total, .. }) in mutation_table(alpha) {
        let coeff = scalar::int(total as i64) * scalar::pow2(beta.length() as i64);
        out.add_term(beta, coeff);
    }
    cache.lock().unwrap().insert(alpha.clone(), out.clone());
    out
}

fn mutation_table(alpha: &WeakComposition) -> BTreeMap<WeakComposition, MutationEntry> {
    mutation::mutation_table(alpha)
}

/// `K[α]` as a combination of fundamental symbols, by expanding mutations
/// into `M` and regrouping into `F`. Coefficients of mutations without a
/// clean decomposition must cancel; this is asserted. (Indices that are not
/// mutations of `α` can legitimately survive: refining a mutation may leave
/// the mutation set, as in `K[0,1,0]`, whose expansion contains `F[1]`.)
pub fn expand_k_to_f(alpha: &WeakComposition) -> Element {
    let table = mutation_table(alpha);
    let mut out = Element::zero(Basis::F);
    for (beta, MutationEntry { total, .. }) in &table {
        let factor = scalar::int(*total as i64) * scalar::pow2(beta.length() as i64);
        let in_f = expand_m_to_f(beta);
        for (delta, coeff) in in_f.terms() {
            out.add_term(delta.clone(), coeff * &factor);
        }
    }
    for (delta, _) in out.terms() {
        if let Some(entry) = table.get(delta) {
            assert!(
                entry.clean > 0,
                "expand_k_to_f: mutation without clean decomposition survives: {delta} for {alpha}"
            );
        }
    }
    out
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("no expansion from basis {from} to basis {to}")]
pub struct ExpandError {
    pub from: char,
    pub to: char,
}

/// Apply a generator-level map linearly.
pub fn apply_linear(
    x: &Element,
    target: Basis,
    f: impl Fn(&WeakComposition) -> Element,
) -> Element {
    let mut out = Element::zero(target);
    for (alpha, coeff) in x.terms() {
        let image = f(alpha);
        assert_eq!(image.basis(), target, "apply_linear: basis mismatch");
        for (beta, c) in image.terms() {
            out.add_term(beta.clone(), c * coeff);
        }
    }
    out
}

/// Convert an element to the requested basis. Supported directions: identity,
/// `F → M`, `M → F`, `K → M`, `K → F`.
pub fn expand(x: &Element, to: Basis) -> Result<Element, ExpandError> {
    match (x.basis(), to) {
        (from, to) if from == to => Ok(x.clone()),
        (Basis::F, Basis::M) => Ok(apply_linear(x, to, expand_f_to_m)),
        (Basis::M, Basis::F) => Ok(apply_linear(x, to, expand_m_to_f)),
        (Basis::K, Basis::M) => Ok(apply_linear(x, to, expand_k_to_m)),
        (Basis::K, Basis::F) => Ok(apply_linear(x, to, expand_k_to_f)),
        (from, to) => Err(ExpandError { from: from.letter(), to: to.letter() }),
    }
}

/// Convert to the monomial basis (every basis expands into `M`).
pub fn to_m(x: &Element) -> Element {
    expand(x, Basis::M).expect("every basis expands into M")
}

/// Equality of the functions two elements denote. Peak elements are
/// compared through the monomial expansion: the canonical peak family is
/// linearly dependent (see `k_canonical_family_is_dependent`), so map
/// equality of K-combinations is finer than equality of functions. The
/// other bases are genuine bases, where map equality is the same thing.
pub fn functionally_equal(x: &Element, y: &Element) -> bool {
    assert!(x.basis() == y.basis(), "functionally_equal: mixed bases");
    if x.basis() == Basis::K { to_m(x) == to_m(y) } else { x == y }
}

fn all_zeros(n: u64) -> WeakComposition {
    WeakComposition::new(vec![0u64; n as usize])
}

/// Closed form for `F[0^m] · F[0^n]`, `m, n >= 1`.
pub fn f_zero_product(m: u64, n: u64) -> Element {
    assert!(m >= 1 && n >= 1, "f_zero_product: exponents must be >= 1");
    let (m, n) = (m as i64, n as i64);
    let mut out = Element::zero(Basis::F);
    for j in 0..=m {
        let sign = if j % 2 == 0 { scalar::int(1) } else { scalar::int(-1) };
        let coeff = sign * scalar::binom(m, j) * scalar::binom(m + n - j, m);
        out.add_term(all_zeros((m + n - j) as u64), coeff);
    }
    out
}

/// Closed form for `K[0^m] · K[0^n]`, `m, n >= 1`.
pub fn k_zero_product(m: u64, n: u64) -> Element {
    assert!(m >= 1 && n >= 1, "k_zero_product: exponents must be >= 1");
    let (m, n) = if m <= n { (m as i64, n as i64) } else { (n as i64, m as i64) };
    let mut out = Element::zero(Basis::K);
    for k in 0..=m {
        let sign = if k % 2 == 0 { scalar::int(1) } else { scalar::int(-1) };
        let coeff = sign
            * scalar::binom(m + n - k, m)
            * scalar::binom(m, k)
            * scalar::ratio(m + n - 2 * k, m + n - k);
        out.add_term(all_zeros((m + n - 2 * k) as u64), coeff);
    }
    out
}

/// The two closed expansions of the enriched weight enumerator of the fully
/// barred chain with descent composition `γ` (zero-free, nonempty).
pub struct LambdaEmptyForms {
    pub in_m: Element,
    pub in_k: Element,
}

pub fn lambda_empty(gamma: &WeakComposition) -> LambdaEmptyForms {
    assert!(
        !gamma.is_empty() && gamma.is_composition(),
        "lambda_empty: argument must be a nonempty zero-free composition"
    );
    let n = gamma.weight() as i64;
    let p = gamma.peak_set().len() as i64;
    let mut in_m = Element::zero(Basis::M);
    for j in 0..=n {
        let mut m_coeff = Scalar::zero();
        for i in 0..=p {
            m_coeff += scalar::binom(n - 2 * p - 1, i + j - 2 * p - 1)
                * scalar::binom(p, i)
                * scalar::pow2(i);
        }
        let coeff = m_coeff * scalar::pow2(j);
        in_m.add_term(all_zeros(j as u64), coeff);
    }
    let mut in_k = Element::zero(Basis::K);
    for k in 0..=p {
        let sign = if k % 2 == 0 { scalar::int(1) } else { scalar::int(-1) };
        in_k.add_term(all_zeros((n - 2 * k) as u64), sign * scalar::binom(p, k));
    }
    LambdaEmptyForms { in_m, in_k }
}

/// The two closed expansions of the ordinary weight enumerator of the fully
/// barred chain with descent composition `γ` (zero-free, nonempty).
pub struct GammaEmptyForms {
    pub in_m: Element,
    pub in_f: Element,
}

pub fn gamma_empty(gamma: &WeakComposition) -> GammaEmptyForms {
    assert!(
        !gamma.is_empty() && gamma.is_composition(),
        "gamma_empty: argument must be a nonempty zero-free composition"
    );
    let n = gamma.weight() as i64;
    let l = gamma.length() as i64;
    let mut in_m = Element::zero(Basis::M);
    for j in l..=n {
        in_m.add_term(all_zeros(j as u64), scalar::binom(n - l, j - l));
    }
    let mut in_f = Element::zero(Basis::F);
    for j in 0..l {
        let sign = if j % 2 == 0 { scalar::int(1) } else { scalar::int(-1) };
        in_f.add_term(all_zeros((n - j) as u64), sign * scalar::binom(l - 1, j));
    }
    GammaEmptyForms { in_m, in_f }
}

/// Mutual expansions of the all-zero symbols `M[0^r]`, `F[0^r]`, `K[0^r]`.
pub struct ZeroBasisChange {
    pub m_in_k: Element,
    pub f_in_k: Element,
    pub k_in_m: Element,
    pub k_in_f: Element,
}

pub fn k0_f0_basis_change(r: u64) -> ZeroBasisChange {
    assert!(r >= 1, "k0_f0_basis_change: exponent must be >= 1");
    let r = r as i64;
    let mut m_in_k = Element::zero(Basis::K);
    let mut f_in_k = Element::zero(Basis::K);
    for i in 1..=r {
        let weight = scalar::pow2(-r) * scalar::binom(r - 1, i - 1);
        let sign = if (r - i) % 2 == 0 { scalar::int(1) } else { scalar::int(-1) };
        m_in_k.add_term(all_zeros(i as u64), sign * &weight);
        f_in_k.add_term(all_zeros(i as u64), weight);
    }
    let mut k_in_m = Element::zero(Basis::M);
    for j in 1..=r {
        k_in_m.add_term(all_zeros(j as u64), scalar::pow2(j) * scalar::binom(r - 1, j - 1));
    }
    let k_in_f = apply_linear(&k_in_m, Basis::F, expand_m_to_f);
    ZeroBasisChange { m_in_k, f_in_k, k_in_m, k_in_f }
}
