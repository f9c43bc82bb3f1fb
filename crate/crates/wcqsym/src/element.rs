//! Linear combinations over the three bases.
//!
//! An `Element` is a finite ℚ-linear combination of basis symbols `M[α]`,
//! `F[α]`, or `K[α]`, stored sparsely with zero coefficients dropped. Keys in
//! the peak basis `K` are always kept in canonical form, so structural
//! equality of elements is semantic equality. `TensorElement` is the same
//! thing for simple tensors, used by the coalgebra structure.

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;
use thiserror::Error;

use crate::scalar::{self, Scalar};
use crate::wc::WeakComposition;

/// The three bases of the kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    M,
    F,
    K,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::M => 'M',
            Basis::F => 'F',
            Basis::K => 'K',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'M' => Some(Basis::M),
            'F' => Some(Basis::F),
            'K' => Some(Basis::K),
            _ => None,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A sparse ℚ-linear combination of basis symbols in one basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    basis: Basis,
    terms: BTreeMap<WeakComposition, Scalar>,
}

impl Element {
    pub fn zero(basis: Basis) -> Self {
        Element { basis, terms: BTreeMap::new() }
    }

    /// The unit of the algebra: the basis symbol of the empty composition.
    pub fn one(basis: Basis) -> Self {
        Element::generator(basis, WeakComposition::empty())
    }

    /// A single basis symbol with coefficient 1. `K` keys are canonicalized.
    pub fn generator(basis: Basis, alpha: WeakComposition) -> Self {
        let mut e = Element::zero(basis);
        e.add_term(alpha, scalar::int(1));
        e
    }

    pub fn from_terms(
        basis: Basis,
        terms: impl IntoIterator<Item = (WeakComposition, Scalar)>,
    ) -> Self {
        let mut e = Element::zero(basis);
        for (alpha, coeff) in terms {
            e.add_term(alpha, coeff);
        }
        e
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeakComposition, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, alpha: &WeakComposition) -> Scalar {
        let key = self.normalize_key(alpha.clone());
        self.terms.get(&key).cloned().unwrap_or_else(Scalar::zero)
    }

    fn normalize_key(&self, alpha: WeakComposition) -> WeakComposition {
        match self.basis {
            Basis::K => alpha.canonical_form(),
            _ => alpha,
        }
    }

    /// Add `coeff · basis[alpha]`, canonicalizing `K` keys and dropping zeros.
    pub fn add_term(&mut self, alpha: WeakComposition, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let key = self.normalize_key(alpha);
        let entry = self.terms.entry(key.clone()).or_insert_with(Scalar::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        assert_eq!(self.basis, other.basis, "add: basis mismatch");
        let mut out = self.clone();
        for (alpha, coeff) in other.terms() {
            out.add_term(alpha.clone(), coeff.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        self.scale(&scalar::int(-1))
    }

    pub fn scale(&self, factor: &Scalar) -> Element {
        if factor.is_zero() {
            return Element::zero(self.basis);
        }
        Element {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(alpha, coeff)| (alpha.clone(), coeff * factor))
                .collect(),
        }
    }

    /// Parse an element in one expected basis: `0`, or terms of the shape
    /// `c*B[parts]` (coefficient optional) joined by ` + ` / ` - `, with an
    /// optional leading `-`.
    pub fn parse(text: &str, basis: Basis) -> Result<Element, ElementParseError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(ElementParseError::Empty);
        }
        if text == "0" {
            return Ok(Element::zero(basis));
        }
        let mut out = Element::zero(basis);
        for (sign, term) in split_terms(text)? {
            let (alpha, coeff) = parse_term(term, basis)?;
            out.add_term(alpha, if sign { -coeff } else { coeff });
        }
        Ok(out)
    }
}

/// Split into (negated?, term-text) pieces on ` + ` / ` - ` separators.
fn split_terms(text: &str) -> Result<Vec<(bool, &str)>, ElementParseError> {
    let mut out = Vec::new();
    let mut rest = text;
    let mut sign = if let Some(stripped) = rest.strip_prefix('-') {
        rest = stripped.trim_start();
        true
    } else {
        false
    };
    loop {
        let plus = rest.find(" + ");
        let minus = rest.find(" - ");
        let (cut, next_sign, skip) = match (plus, minus) {
            (Some(p), Some(m)) if p < m => (Some(p), false, 3),
            (Some(_), Some(m)) => (Some(m), true, 3),
            (Some(p), None) => (Some(p), false, 3),
            (None, Some(m)) => (Some(m), true, 3),
            (None, None) => (None, false, 0),
        };
        match cut {
            Some(at) => {
                let term = rest[..at].trim();
                if term.is_empty() {
                    return Err(ElementParseError::Malformed(text.to_string()));
                }
                out.push((sign, term));
                rest = &rest[at + skip..];
                sign = next_sign;
            }
            None => {
                let term = rest.trim();
                if term.is_empty() {
                    return Err(ElementParseError::Malformed(text.to_string()));
                }
                out.push((sign, term));
                return Ok(out);
            }
        }
    }
}

fn parse_term(term: &str, basis: Basis) -> Result<(WeakComposition, Scalar), ElementParseError> {
    let bracket = term
        .find('[')
        .ok_or_else(|| ElementParseError::Malformed(term.to_string()))?;
    if !term.ends_with(']') {
        return Err(ElementParseError::Malformed(term.to_string()));
    }
    let head = term[..bracket].trim();
    let inner = &term[bracket + 1..term.len() - 1];
    let (coeff_text, basis_text) = match head.rfind('*') {
        Some(star) => (Some(head[..star].trim()), head[star + 1..].trim()),
        None => (None, head),
    };
    let mut letters = basis_text.chars();
    let letter = letters
        .next()
        .ok_or_else(|| ElementParseError::Malformed(term.to_string()))?;
    if letters.next().is_some() {
        return Err(ElementParseError::Malformed(term.to_string()));
    }
    let term_basis =
        Basis::from_letter(letter).ok_or_else(|| ElementParseError::UnknownBasis(letter))?;
    if term_basis != basis {
        return Err(ElementParseError::BasisMismatch {
            expected: basis.letter(),
            found: letter,
        });
    }
    let coeff = match coeff_text {
        Some(text) => scalar::parse(text).map_err(ElementParseError::Scalar)?,
        None => scalar::int(1),
    };
    let alpha: WeakComposition = inner
        .parse()
        .map_err(ElementParseError::Composition)?;
    Ok((alpha, coeff))
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (alpha, coeff)) in self.terms.iter().enumerate() {
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
            write!(
                f,
                "{}*{}[{}]",
                scalar::render(&scalar::abs(coeff)),
                self.basis.letter(),
                alpha
            )?;
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ElementParseError {
    #[error("empty element literal")]
    Empty,
    #[error("malformed element term `{0}`")]
    Malformed(String),
    #[error("unknown basis letter `{0}`")]
    UnknownBasis(char),
    #[error("expected basis `{expected}`, found `{found}`")]
    BasisMismatch { expected: char, found: char },
    #[error("bad coefficient: {0}")]
    Scalar(#[source] scalar::ScalarParseError),
    #[error("bad weak composition: {0}")]
    Composition(#[source] crate::wc::WcParseError),
}

/// A sparse linear combination of simple tensors `B[α] ⊗ B[β]`.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    basis: Basis,
    terms: BTreeMap<(WeakComposition, WeakComposition), Scalar>,
}

impl TensorElement {
    pub fn zero(basis: Basis) -> Self {
        TensorElement { basis, terms: BTreeMap::new() }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(
        &self,
    ) -> impl Iterator<Item = (&(WeakComposition, WeakComposition), &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, left: &WeakComposition, right: &WeakComposition) -> Scalar {
        let key = self.normalize_key((left.clone(), right.clone()));
        self.terms.get(&key).cloned().unwrap_or_else(Scalar::zero)
    }

    fn normalize_key(
        &self,
        pair: (WeakComposition, WeakComposition),
    ) -> (WeakComposition, WeakComposition) {
        match self.basis {
            Basis::K => (pair.0.canonical_form(), pair.1.canonical_form()),
            _ => pair,
        }
    }

    pub fn add_term(&mut self, left: WeakComposition, right: WeakComposition, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let key = self.normalize_key((left, right));
        let entry = self.terms.entry(key.clone()).or_insert_with(Scalar::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        assert_eq!(self.basis, other.basis, "add: basis mismatch");
        let mut out = self.clone();
        for ((l, r), coeff) in other.terms() {
            out.add_term(l.clone(), r.clone(), coeff.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        self.add(&other.scale(&scalar::int(-1)))
    }

    pub fn scale(&self, factor: &Scalar) -> TensorElement {
        if factor.is_zero() {
            return TensorElement::zero(self.basis);
        }
        TensorElement {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(key, coeff)| (key.clone(), coeff * factor))
                .collect(),
        }
    }

    /// The outer product `x ⊗ y` of two elements in the same basis.
    pub fn outer(x: &Element, y: &Element) -> TensorElement {
        assert_eq!(x.basis(), y.basis(), "outer: basis mismatch");
        let mut out = TensorElement::zero(x.basis());
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                out.add_term(a.clone(), b.clone(), ca * cb);
            }
        }
        out
    }

    /// Apply a linear map (given on generators) to the left slot.
    pub fn map_left(&self, f: impl Fn(&WeakComposition) -> Element) -> TensorElement {
        let mut out = TensorElement::zero(self.basis);
        for ((l, r), coeff) in self.terms() {
            let image = f(l);
            assert_eq!(image.basis(), self.basis, "map_left: basis mismatch");
            for (a, ca) in image.terms() {
                out.add_term(a.clone(), r.clone(), coeff * ca);
            }
        }
        out
    }

    /// Apply a linear map (given on generators) to the right slot.
    pub fn map_right(&self, f: impl Fn(&WeakComposition) -> Element) -> TensorElement {
        let mut out = TensorElement::zero(self.basis);
        for ((l, r), coeff) in self.terms() {
            let image = f(r);
            assert_eq!(image.basis(), self.basis, "map_right: basis mismatch");
            for (b, cb) in image.terms() {
                out.add_term(l.clone(), b.clone(), coeff * cb);
            }
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, ((left, right), coeff)) in self.terms.iter().enumerate() {
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
            let b = self.basis.letter();
            write!(
                f,
                "{}*{}[{}]⊗{}[{}]",
                scalar::render(&scalar::abs(coeff)),
                b,
                left,
                b,
                right
            )?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wc(parts: &[u64]) -> WeakComposition {
        WeakComposition::new(parts.to_vec())
    }

    #[test]
    fn display_matches_grammar() {
        let mut e = Element::zero(Basis::F);
        e.add_term(wc(&[0, 1]), scalar::int(4));
        e.add_term(wc(&[1]), scalar::int(2));
        assert_eq!(e.to_string(), "2*F[1] + 4*F[0,1]");
        // Rendering follows canonical key order, not insertion order, so a
        // negative coefficient on the least key produces a leading minus.
        let mut e = Element::zero(Basis::F);
        e.add_term(wc(&[0, 1]), scalar::int(4));
        e.add_term(wc(&[1]), scalar::int(-2));
        assert_eq!(e.to_string(), "-2*F[1] + 4*F[0,1]");
        assert_eq!(Element::zero(Basis::M).to_string(), "0");
        assert_eq!(
            Element::generator(Basis::M, WeakComposition::empty()).to_string(),
            "1*M[e]"
        );
        let half = Element::generator(Basis::K, wc(&[0, 1])).scale(&scalar::ratio(1, 2));
        assert_eq!(half.to_string(), "1/2*K[0,1]");
    }

    #[test]
    fn k_keys_are_canonicalized() {
        let e = Element::generator(Basis::K, wc(&[1, 2]));
        assert_eq!(e.coefficient(&wc(&[3])), scalar::int(1));
        assert_eq!(e.coefficient(&wc(&[1, 2])), scalar::int(1));
        assert_eq!(e.to_string(), "1*K[3]");
        let f = Element::generator(Basis::F, wc(&[1, 2]));
        assert_eq!(f.coefficient(&wc(&[3])), scalar::int(0));
    }

    #[test]
    fn addition_cancels_exactly() {
        let a = Element::generator(Basis::M, wc(&[1, 0]));
        let b = a.neg();
        assert!(a.add(&b).is_zero());
        let c = Element::generator(Basis::K, wc(&[1, 1])); // canonical key [2]
        let d = Element::generator(Basis::K, wc(&[2])).neg();
        assert!(c.add(&d).is_zero());
    }

    #[test]
    fn parse_round_trip() {
        let texts = [
            "4*F[0,1] - 2*F[1]",
            "-2*F[1] + 4*F[0,1]",
            "1*F[e]",
            "0",
            "1/2*F[0,0] - 3/4*F[2,0,1]",
        ];
        for text in texts {
            let e = Element::parse(text, Basis::F).unwrap();
            let rendered = e.to_string();
            let again = Element::parse(&rendered, Basis::F).unwrap();
            assert_eq!(e, again, "round trip failed for `{text}`");
        }
        assert_eq!(
            Element::parse("4*F[0,1] - 2*F[1]", Basis::F).unwrap().to_string(),
            "-2*F[1] + 4*F[0,1]"
        );
        assert_eq!(
            Element::parse("K[2]", Basis::K).unwrap(),
            Element::generator(Basis::K, wc(&[2]))
        );
        assert!(Element::parse("4*F[0,1]", Basis::M).is_err());
        assert!(Element::parse("4*Q[1]", Basis::F).is_err());
        assert!(Element::parse("", Basis::F).is_err());
        assert!(Element::parse("4*F[0,1] +", Basis::F).is_err());
    }

    #[test]
    fn tensor_display_and_ops() {
        let x = Element::generator(Basis::K, wc(&[2, 0]));
        let y = Element::generator(Basis::K, wc(&[0, 1]));
        let t = TensorElement::outer(&x, &y);
        assert_eq!(t.to_string(), "1*K[2,0]⊗K[0,1]");
        assert_eq!(t.coefficient(&wc(&[2, 0]), &wc(&[0, 1])), scalar::int(1));
        assert!(t.sub(&t).is_zero());
    }
}
