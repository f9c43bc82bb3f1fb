//! Coproduct, counit, and antipode in the three bases.
//!
//! The monomial coproduct deconcatenates the index; the fundamental and peak
//! coproducts additionally cut through positive parts (near-concatenation
//! splits). Antipodes are closed formulas: consecutive grouping of the
//! reversed index for `M`, a signed zero-run contraction of the transpose for
//! `F`, and a signed transpose for `K`.

use crate::element::{Basis, Element, TensorElement};
use crate::expand::{for_each_zero_contraction, to_m};
use crate::product::product_generators;
use crate::scalar::{self, Scalar};
use crate::wc::WeakComposition;

/// Whether a split cuts between parts or through a positive part.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitKind {
    Concatenation,
    NearConcatenation,
}

/// One way of cutting an index in two for the coproduct: either `α = β·γ`,
/// or `α = β∨γ` with the boundary parts of both halves positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPair {
    pub left: WeakComposition,
    pub right: WeakComposition,
    pub kind: SplitKind,
}

/// All concatenation and near-concatenation splits of an index. A positive
/// part `s` can be cut through in `s − 1` ways; zeros only split at their
/// boundaries.
pub fn split_pairs(alpha: &WeakComposition) -> Vec<SplitPair> {
    let parts = alpha.parts();
    let mut out = Vec::new();
    for cut in 0..=parts.len() {
        out.push(SplitPair {
            left: WeakComposition::new(parts[..cut].to_vec()),
            right: WeakComposition::new(parts[cut..].to_vec()),
            kind: SplitKind::Concatenation,
        });
    }
    for (p, &s) in parts.iter().enumerate() {
        for s1 in 1..s {
            let mut left = parts[..p].to_vec();
            left.push(s1);
            let mut right = vec![s - s1];
            right.extend_from_slice(&parts[p + 1..]);
            out.push(SplitPair {
                left: WeakComposition::new(left),
                right: WeakComposition::new(right),
                kind: SplitKind::NearConcatenation,
            });
        }
    }
    out
}

/// Coproduct, extended linearly from the generators. In the `M` basis only
/// concatenation splits contribute; in `F` and `K` all splits do, and `K`
/// keys are canonicalized on both tensor slots.
pub fn coproduct(x: &Element) -> TensorElement {
    let mut out = TensorElement::zero(x.basis());
    for (alpha, coeff) in x.terms() {
        for split in split_pairs(alpha) {
            if x.basis() == Basis::M && split.kind == SplitKind::NearConcatenation {
                continue;
            }
            out.add_term(split.left, split.right, coeff.clone());
        }
    }
    out
}

/// Counit: the coefficient of the empty index.
pub fn counit(x: &Element) -> Scalar {
    x.coefficient(&WeakComposition::empty())
}

/// Antipode, extended linearly from the closed formulas per basis.
pub fn antipode(x: &Element) -> Element {
    let mut out = Element::zero(x.basis());
    for (alpha, coeff) in x.terms() {
        let image = match x.basis() {
            Basis::M => antipode_m(alpha),
            Basis::F => antipode_f(alpha),
            Basis::K => antipode_k(alpha),
        };
        out = out.add(&image.scale(coeff));
    }
    out
}

fn sign_of(parity: u64) -> Scalar {
    scalar::int(if parity % 2 == 0 { 1 } else { -1 })
}

/// `(−1)^{ℓ(α)} Σ M[grouped]` over all consecutive groupings of the
/// reversed part sequence, each group summed into a single part.
fn antipode_m(alpha: &WeakComposition) -> Element {
    let reversed: Vec<u64> = alpha.parts().iter().rev().copied().collect();
    let sign = sign_of(reversed.len() as u64);
    let mut out = Element::zero(Basis::M);
    if reversed.is_empty() {
        out.add_term(WeakComposition::empty(), sign);
        return out;
    }
    for grouping in WeakComposition::compositions(reversed.len() as u64) {
        let mut grouped = Vec::with_capacity(grouping.length());
        let mut pos = 0usize;
        for &g in grouping.parts() {
            let g = g as usize;
            grouped.push(reversed[pos..pos + g].iter().sum());
            pos += g;
        }
        out.add_term(WeakComposition::new(grouped), sign.clone());
    }
    out
}

/// `Σ (−1)^{‖β‖} d_{αᵗβ} F[β]` over the zero-run contractions β of the
/// transpose, with `d` the product of `binom(run−1, shrunk−1)` factors.
fn antipode_f(alpha: &WeakComposition) -> Element {
    let mut out = Element::zero(Basis::F);
    for_each_zero_contraction(&alpha.transpose(), |beta, factor| {
        let signed = &factor * &sign_of(beta.total_weight());
        out.add_term(beta, signed);
    });
    out
}

/// `(−1)^{‖α‖} K[αᵗ]`, with the key canonicalized.
fn antipode_k(alpha: &WeakComposition) -> Element {
    let mut out = Element::zero(Basis::K);
    let sign = sign_of(alpha.total_weight());
    out.add_term(alpha.transpose(), sign);
    out
}

/// Slotwise product of two tensors: `(a⊗b)(c⊗d) = ac⊗bd`, extended
/// bilinearly.
pub fn tensor_product(a: &TensorElement, b: &TensorElement) -> TensorElement {
    assert_eq!(a.basis(), b.basis(), "tensor_product: basis mismatch");
    let basis = a.basis();
    let mut out = TensorElement::zero(basis);
    for ((l1, r1), c1) in a.terms() {
        for ((l2, r2), c2) in b.terms() {
            let left = product_generators(basis, l1, l2);
            let right = product_generators(basis, r1, r2);
            let c = c1 * c2;
            for (lk, lc) in left.terms() {
                for (rk, rc) in right.terms() {
                    out.add_term(lk.clone(), rk.clone(), &c * &(lc * rc));
                }
            }
        }
    }
    out
}

/// Multiply the two slots of each tensor term and sum: the multiplication
/// map applied to a tensor.
pub fn tensor_collapse(t: &TensorElement) -> Element {
    let mut out = Element::zero(t.basis());
    for ((l, r), c) in t.terms() {
        out = out.add(&product_generators(t.basis(), l, r).scale(c));
    }
    out
}

/// Expand both slots of a tensor into the monomial basis.
pub fn tensor_to_m(t: &TensorElement) -> TensorElement {
    if t.basis() == Basis::M {
        return t.clone();
    }
    let mut out = TensorElement::zero(Basis::M);
    for ((l, r), c) in t.terms() {
        let lm = to_m(&Element::generator(t.basis(), l.clone()));
        let rm = to_m(&Element::generator(t.basis(), r.clone()));
        for (lk, lc) in lm.terms() {
            for (rk, rc) in rm.terms() {
                out.add_term(lk.clone(), rk.clone(), c * &(lc * rc));
            }
        }
    }
    out
}

/// Tensor counterpart of `functionally_equal`: peak tensors are compared
/// slot-by-slot through the monomial expansion, the other bases directly.
pub fn tensors_functionally_equal(x: &TensorElement, y: &TensorElement) -> bool {
    assert!(x.basis() == y.basis(), "tensors_functionally_equal: mixed bases");
    if x.basis() == Basis::K { tensor_to_m(x) == tensor_to_m(y) } else { x == y }
}
