//! Projections between the weak-composition algebra, its peak subalgebra,
//! and the zero-indexed subalgebras.
//!
//! `map_phi` forgets zeros (projecting onto quasisymmetric functions),
//! `map_rho` does the same on the peak side, `map_theta_big` is the
//! descent-to-peak surjection Θ, `map_pi` projects onto the all-zero-indexed
//! subalgebra, and `map_phi_b` is the one-parameter family φ_b acting on
//! that subalgebra.

use crate::element::{Basis, Element};
use crate::expand::for_each_zero_contraction;
use crate::scalar::{self, Scalar};
use crate::wc::WeakComposition;

/// Split `α = (0^i, middle, 0^j)` with `middle` a nonempty zero-free
/// composition; `None` when no such split exists (interior zeros, or all
/// parts zero).
fn zero_sandwich(alpha: &WeakComposition) -> Option<(usize, WeakComposition, usize)> {
    let parts = alpha.parts();
    let lead = parts.iter().take_while(|&&p| p == 0).count();
    let trail = parts.iter().rev().take_while(|&&p| p == 0).count();
    if lead + trail >= parts.len() {
        return None;
    }
    let middle = &parts[lead..parts.len() - trail];
    if middle.iter().any(|&p| p == 0) {
        return None;
    }
    Some((lead, WeakComposition::new(middle.to_vec()), trail))
}

/// Projection onto quasisymmetric functions. On monomial generators:
/// `M[α] ↦ (−1)^{ℓ₀(α)} M[ᾱ]` when `α` has no leading zero, `0` otherwise.
/// On fundamental generators: `F[α] ↦ (−1)^j F[middle]` when
/// `α = (0^i, middle, 0^j)` with `middle` a nonempty composition and
/// `j ≤ 1`, `0` otherwise. The empty index is fixed.
///
/// # Panics
/// Panics on peak-basis input; apply it before `map_theta_big`, not after.
pub fn map_phi(x: &Element) -> Element {
    let basis = x.basis();
    assert!(basis != Basis::K, "map_phi: monomial or fundamental input required");
    let mut out = Element::zero(basis);
    for (alpha, coeff) in x.terms() {
        if alpha.is_empty() {
            out.add_term(alpha.clone(), coeff.clone());
            continue;
        }
        match basis {
            Basis::M => {
                if alpha.parts()[0] == 0 {
                    continue;
                }
                let sign = scalar::int(if alpha.zero_length() % 2 == 0 { 1 } else { -1 });
                out.add_term(alpha.bar(), coeff * &sign);
            }
            Basis::F => {
                if let Some((_, middle, j)) = zero_sandwich(alpha) {
                    if j <= 1 {
                        let sign = scalar::int(if j == 0 { 1 } else { -1 });
                        out.add_term(middle, coeff * &sign);
                    }
                }
            }
            Basis::K => unreachable!(),
        }
    }
    out
}

/// Projection of the peak algebra onto peak functions of compositions:
/// `K[α] ↦ (−1)^j 2^{2−δ_{i,0}−δ_{j,0}} K[middle]` when
/// `α = (0^i, middle, 0^j)` with `middle` a nonempty composition, `0` when
/// the zeros sit between positive parts. The empty index is fixed.
///
/// # Panics
/// Panics unless the input is in the peak basis.
pub fn map_rho(x: &Element) -> Element {
    assert!(x.basis() == Basis::K, "map_rho: peak-basis input required");
    let mut out = Element::zero(Basis::K);
    for (alpha, coeff) in x.terms() {
        if alpha.is_empty() {
            out.add_term(alpha.clone(), coeff.clone());
            continue;
        }
        if let Some((i, middle, j)) = zero_sandwich(alpha) {
            let mut exponent = 2i64;
            if i == 0 {
                exponent -= 1;
            }
            if j == 0 {
                exponent -= 1;
            }
            let sign = scalar::int(if j % 2 == 0 { 1 } else { -1 });
            out.add_term(middle, coeff * &sign * scalar::pow2(exponent));
        }
    }
    out
}

/// Descent-to-peak surjection Θ:
/// `F[α] ↦ 2^{−ℓ₀(α)} Σ_β (Π binom(run−1, shrunk−1)) K[β]` over the
/// zero-run contractions β of α. On zero-free indices this is the classical
/// descent-to-peak map: `F[α] ↦ K[α]`.
///
/// # Panics
/// Panics unless the input is in the fundamental basis.
pub fn map_theta_big(x: &Element) -> Element {
    assert!(x.basis() == Basis::F, "map_theta_big: fundamental-basis input required");
    let mut out = Element::zero(Basis::K);
    for (alpha, coeff) in x.terms() {
        let base = coeff * &scalar::pow2(-(alpha.zero_length() as i64));
        for_each_zero_contraction(alpha, |beta, factor| {
            out.add_term(beta, &base * &factor);
        });
    }
    out
}

/// Projection onto the subalgebra indexed by all-zero sequences: keeps
/// exactly the terms whose index has weight zero (the empty index included).
///
/// # Panics
/// Panics on monomial input, where the subalgebra is not spanned by
/// generators this way.
pub fn map_pi(x: &Element) -> Element {
    assert!(x.basis() != Basis::M, "map_pi: fundamental- or peak-basis input required");
    let mut out = Element::zero(x.basis());
    for (alpha, coeff) in x.terms() {
        if alpha.weight() == 0 {
            out.add_term(alpha.clone(), coeff.clone());
        }
    }
    out
}

/// Coefficients `b_{n,1}, …, b_{n,n}` of `φ_b` on the zero-run of length
/// `n`, from the recursion
/// `(n+1) b_{n+1,j} = n b_{n,j} + j b (b_{n,j−1} − b_{n,j+1})` seeded with
/// `b_{0,0} = 1` (so `b_{n,0} = 0` for `n ≥ 1` and `b_{n,j} = 0` for
/// `j > n`).
pub fn phi_b_coefficients(n: u64, b: &Scalar) -> Vec<Scalar> {
    let n = n as usize;
    let mut row = vec![scalar::int(1)]; // b_{0,0}
    for m in 0..n {
        let mut next = vec![scalar::int(0); m + 2];
        let at = |j: usize| -> Scalar {
            if j < row.len() { row[j].clone() } else { scalar::int(0) }
        };
        for (j, slot) in next.iter_mut().enumerate().skip(1) {
            let spread = at(j - 1) - at(j + 1);
            let value = scalar::int(m as i64) * at(j) + scalar::int(j as i64) * b * spread;
            *slot = value / scalar::int(m as i64 + 1);
        }
        row = next;
    }
    if n == 0 { Vec::new() } else { row[1..].to_vec() }
}

/// The map `φ_b` on the zero-indexed subalgebra:
/// `F[0^n] ↦ Σ_i b_{n,i} K[0^i]`, the empty index to the empty index. At
/// `b = 1/2` this is the identity under the change of basis between
/// fundamental and peak zero-symbols.
///
/// # Panics
/// Panics unless the input is a fundamental-basis element supported on
/// all-zero indices.
pub fn map_phi_b(x: &Element, b: &Scalar) -> Element {
    assert!(x.basis() == Basis::F, "map_phi_b: fundamental-basis input required");
    let mut out = Element::zero(Basis::K);
    for (alpha, coeff) in x.terms() {
        assert!(
            alpha.weight() == 0,
            "map_phi_b: support must lie in the zero-indexed subalgebra, found {alpha}"
        );
        let n = alpha.zero_length() as u64;
        if n == 0 {
            out.add_term(alpha.clone(), coeff.clone());
            continue;
        }
        for (i, value) in phi_b_coefficients(n, b).iter().enumerate() {
            out.add_term(
                WeakComposition::new(vec![0; i + 1]),
                coeff * value,
            );
        }
    }
    out
}
