//! Products in the three bases.
//!
//! Monomial symbols multiply by the quasi-shuffle of their indices. The
//! fundamental and peak bases multiply through labeled chain words: shift the
//! two words onto disjoint label ranges (keeping barred labels below unbarred
//! ones), shuffle, and rewrite every interleaving back into the basis.

use std::collections::HashMap;

use crate::element::{Basis, Element};
use crate::expand::quasi_shuffle;
use crate::scalar::{self, Scalar};
use crate::wc::WeakComposition;
use crate::word::{poset_word, word_to_f, word_to_k};

/// Product of two generators in one basis. Memoized per process (keyed on
/// the sorted index pair — products are commutative): the verification
/// suites multiply the same generator pairs many thousands of times.
pub fn product_generators(basis: Basis, alpha: &WeakComposition, beta: &WeakComposition) -> Element {
    type Key = (Basis, WeakComposition, WeakComposition);
    static CACHE: std::sync::OnceLock<std::sync::Mutex<HashMap<Key, Element>>> =
        std::sync::OnceLock::new();
    let key = if alpha <= beta {
        (basis, alpha.clone(), beta.clone())
    } else {
        (basis, beta.clone(), alpha.clone())
    };
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return hit.clone();
    }
    let out = product_generators_uncached(basis, alpha, beta);
    cache.lock().unwrap().insert(key, out.clone());
    out
}

fn product_generators_uncached(
    basis: Basis,
    alpha: &WeakComposition,
    beta: &WeakComposition,
) -> Element {
    match basis {
        Basis::M => {
            let mut out = Element::zero(Basis::M);
            for (gamma, coeff) in quasi_shuffle(alpha, beta, &scalar::int(1)) {
                out.add_term(gamma, coeff);
            }
            out
        }
        Basis::F | Basis::K => {
            let wa = poset_word(alpha).shift(0, beta.zero_length() as u64);
            let wb = poset_word(beta)
                .shift(alpha.zero_length() as u64, alpha.total_weight());
            let mut out = Element::zero(basis);
            wa.for_each_shuffle(&wb, |letters| {
                let term = match basis {
                    Basis::F => word_to_f(letters),
                    Basis::K => word_to_k(letters),
                    Basis::M => unreachable!(),
                };
                out = out.add(&term);
            });
            out
        }
    }
}

/// Bilinear product of two elements in the same basis.
pub fn product(x: &Element, y: &Element) -> Element {
    assert_eq!(x.basis(), y.basis(), "product: basis mismatch");
    let mut out = Element::zero(x.basis());
    for (alpha, ca) in x.terms() {
        for (beta, cb) in y.terms() {
            let coeff: Scalar = ca * cb;
            let term = product_generators(x.basis(), alpha, beta);
            out = out.add(&term.scale(&coeff));
        }
    }
    out
}

impl Element {
    /// Product in the element's basis.
    pub fn mul(&self, other: &Element) -> Element {
        product(self, other)
    }
}
