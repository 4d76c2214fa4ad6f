//! Exact arithmetic in Clifford and Grassmann superalgebras over the rationals.
//!
//! An algebra context is a [`Signature`]: the list of generator squares, each
//! `-1`, `0`, or `+1`. All `-1` gives the Clifford algebra Cliff(n), all `+1`
//! gives Cliff(-n), all `0` gives the Grassmann algebra. Basis monomials are
//! [`Blade`]s, stored as index bitmasks, and an [`Element`] is a finite
//! rational linear combination of blades in a fixed context.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::{rat, Error, Rat};

/// The vector of generator squares. Entry `i` is the coefficient of the unit
/// in `x_{i+1}^2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature(Vec<i8>);

impl Signature {
    pub fn new(entries: Vec<i8>) -> Result<Self, Error> {
        for &e in &entries {
            if !(-1..=1).contains(&e) {
                return Err(Error::InvalidAlgebra(format!(
                    "signature entries must be -1, 0, or 1, found {e}"
                )));
            }
        }
        if entries.len() > 16 {
            return Err(Error::InvalidAlgebra(format!(
                "signature length {} exceeds the supported bound of 16",
                entries.len()
            )));
        }
        Ok(Signature(entries))
    }

    /// Cliff(n): every generator squares to -1.
    pub fn cliff(n: usize) -> Self {
        Signature(vec![-1; n])
    }

    /// Cliff(-n): every generator squares to +1.
    pub fn cliff_neg(n: usize) -> Self {
        Signature(vec![1; n])
    }

    /// The Grassmann algebra on n odd variables: every generator squares to 0.
    pub fn grassmann(n: usize) -> Self {
        Signature(vec![0; n])
    }

    /// Mixed signature Cliff(p, q): p generators squaring to -1 followed by q
    /// squaring to +1.
    pub fn cliff_pq(p: usize, q: usize) -> Self {
        let mut v = vec![-1; p];
        v.extend(std::iter::repeat(1).take(q));
        Signature(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Square of the 1-based generator `i` as an integer in {-1, 0, 1}.
    pub fn square(&self, i: usize) -> i8 {
        self.0[i - 1]
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    /// Dimension of the algebra: 2^n.
    pub fn dim(&self) -> usize {
        1 << self.0.len()
    }

    pub fn is_all_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{:+}", e)?;
        }
        write!(f, ")")
    }
}

/// Z/2 grading.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_count(k: usize) -> Self {
        if k % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    /// Grading is additive under multiplication.
    pub fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn sign_factor(self, other: Parity) -> i8 {
        if self == Parity::Odd && other == Parity::Odd {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// A basis monomial x_{i1}...x_{ik} with strictly ascending indices, stored as
/// a bitmask: bit `i-1` set means the 1-based generator `i` appears.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade(pub u64);

impl Blade {
    pub const UNIT: Blade = Blade(0);

    /// Blade from 1-based generator indices; indices may repeat or be
    /// unsorted only through [`blade_product`], not here.
    pub fn from_indices(indices: &[usize]) -> Self {
        let mut mask = 0u64;
        for &i in indices {
            mask |= 1 << (i - 1);
        }
        Blade(mask)
    }

    /// 1-based generator indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..64).filter(move |b| mask >> b & 1 == 1).map(|b| b + 1)
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn parity(self) -> Parity {
        Parity::from_count(self.grade())
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> (i - 1) & 1 == 1
    }

    pub fn max_index(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for i in self.indices() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "x{i}")?;
            first = false;
        }
        Ok(())
    }
}

/// Product of two blades in the given signature.
///
/// Returns `(scale, blade)` with `scale * blade` equal to the monomial
/// product. The sign counts the transpositions needed to interleave the two
/// ascending index lists; every repeated index contracts with a factor of the
/// corresponding signature entry, so the scale is 0 whenever a contracted
/// generator squares to 0.
pub fn blade_product(b1: Blade, b2: Blade, sig: &Signature) -> Result<(i32, Blade), Error> {
    let n = sig.len();
    for b in [b1, b2] {
        if b.max_index() > n {
            return Err(Error::IndexOutOfRange {
                index: b.max_index(),
                n,
            });
        }
    }
    // Moving generator j of b2 to its slot costs one transposition per
    // generator of b1 with a strictly larger index.
    let mut swaps = 0u32;
    for j in b2.indices() {
        let above = b1.0 & !((1u64 << j) - 1);
        swaps += above.count_ones();
    }
    let mut scale: i32 = if swaps % 2 == 0 { 1 } else { -1 };
    for i in 1..=n {
        if b1.contains(i) && b2.contains(i) {
            scale *= i32::from(sig.square(i));
        }
    }
    if scale == 0 {
        // a contracted generator squared to zero; canonicalize the blade
        return Ok((0, Blade::UNIT));
    }
    Ok((scale, Blade(b1.0 ^ b2.0)))
}

/// A finite rational linear combination of blades in a fixed context.
///
/// Zero coefficients are never stored; equality is exact coefficient-wise
/// equality in the same context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    context: Signature,
    terms: BTreeMap<Blade, Rat>,
}

impl Element {
    pub fn zero(context: Signature) -> Self {
        Element {
            context,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(context: Signature) -> Self {
        Element::from_blade(context, Blade::UNIT, rat(1))
    }

    pub fn from_blade(context: Signature, blade: Blade, coeff: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(blade, coeff);
        }
        Element { context, terms }
    }

    /// The 1-based generator x_i.
    pub fn generator(context: Signature, i: usize) -> Result<Self, Error> {
        if i == 0 || i > context.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: context.len(),
            });
        }
        Ok(Element::from_blade(
            context,
            Blade::from_indices(&[i]),
            rat(1),
        ))
    }

    pub fn context(&self) -> &Signature {
        &self.context
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, blade: Blade) -> Rat {
        self.terms.get(&blade).cloned().unwrap_or_else(Rat::zero)
    }

    fn check_context(&self, other: &Element) -> Result<(), Error> {
        if self.context != other.context {
            return Err(Error::ContextMismatch {
                left: self.context.to_string(),
                right: other.context.to_string(),
            });
        }
        Ok(())
    }

    fn add_term(&mut self, blade: Blade, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(blade).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&blade);
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        self.checked_add(other).expect("mismatched algebra contexts")
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element, Error> {
        self.check_context(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        self.scale(&rat(-1))
    }

    pub fn scale(&self, s: &Rat) -> Element {
        if s.is_zero() {
            return Element::zero(self.context.clone());
        }
        Element {
            context: self.context.clone(),
            terms: self.terms.iter().map(|(b, c)| (*b, c * s)).collect(),
        }
    }

    /// Clifford product, the bilinear extension of [`blade_product`].
    pub fn mul(&self, other: &Element) -> Element {
        self.checked_mul(other).expect("mismatched algebra contexts")
    }

    pub fn checked_mul(&self, other: &Element) -> Result<Element, Error> {
        self.check_context(other)?;
        let mut out = Element::zero(self.context.clone());
        for (b1, c1) in &self.terms {
            for (b2, c2) in &other.terms {
                let (scale, blade) = blade_product(*b1, *b2, &self.context)?;
                if scale != 0 {
                    out.add_term(blade, c1 * c2 * rat(i64::from(scale)));
                }
            }
        }
        Ok(out)
    }

    /// Split into even and odd parts by blade cardinality.
    pub fn parity_decompose(&self) -> (Element, Element) {
        let mut even = Element::zero(self.context.clone());
        let mut odd = Element::zero(self.context.clone());
        for (b, c) in &self.terms {
            match b.parity() {
                Parity::Even => even.add_term(*b, c.clone()),
                Parity::Odd => odd.add_term(*b, c.clone()),
            }
        }
        (even, odd)
    }

    /// Common parity of all blades, if the element is homogeneous. The zero
    /// element counts as even.
    pub fn parity(&self) -> Option<Parity> {
        let mut parity = None;
        for b in self.terms.keys() {
            match parity {
                None => parity = Some(b.parity()),
                Some(p) if p != b.parity() => return None,
                _ => {}
            }
        }
        Some(parity.unwrap_or(Parity::Even))
    }

    /// Supercommutator [f, g] = fg - (-1)^{|f||g|} gf, defined on homogeneous
    /// parts and extended bilinearly.
    pub fn supercommutator(&self, other: &Element) -> Element {
        self.checked_supercommutator(other)
            .expect("mismatched algebra contexts")
    }

    pub fn checked_supercommutator(&self, other: &Element) -> Result<Element, Error> {
        self.check_context(other)?;
        let (fe, fo) = self.parity_decompose();
        let (ge, go) = other.parity_decompose();
        let mut out = Element::zero(self.context.clone());
        for (f, pf) in [(&fe, Parity::Even), (&fo, Parity::Odd)] {
            for (g, pg) in [(&ge, Parity::Even), (&go, Parity::Odd)] {
                let fg = f.checked_mul(g)?;
                let gf = g.checked_mul(f)?;
                let sign = pf.sign_factor(pg);
                out = out.checked_add(&fg.sub(&gf.scale(&rat(i64::from(sign)))))?;
            }
        }
        Ok(out)
    }

    /// Left partial derivative with respect to the odd variable x_i: delete
    /// x_i from each blade containing it and pick up a sign for each factor
    /// standing in front of it.
    pub fn odd_partial(&self, i: usize) -> Result<Element, Error> {
        if i == 0 || i > self.context.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.context.len(),
            });
        }
        let mut out = Element::zero(self.context.clone());
        for (b, c) in &self.terms {
            if !b.contains(i) {
                continue;
            }
            let preceding = (b.0 & ((1u64 << (i - 1)) - 1)).count_ones();
            let sign = if preceding % 2 == 0 { 1 } else { -1 };
            out.add_term(Blade(b.0 & !(1u64 << (i - 1))), c * rat(sign));
        }
        Ok(out)
    }

    /// Coordinates over the 2^n blade basis, indexed by bitmask.
    pub fn coords(&self) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.context.dim()];
        for (b, c) in &self.terms {
            v[b.0 as usize] = c.clone();
        }
        v
    }

    pub fn from_coords(context: Signature, coords: &[Rat]) -> Result<Self, Error> {
        if coords.len() != context.dim() {
            return Err(Error::DimensionMismatch {
                expected: context.dim(),
                got: coords.len(),
            });
        }
        let mut out = Element::zero(context);
        for (mask, c) in coords.iter().enumerate() {
            out.add_term(Blade(mask as u64), c.clone());
        }
        Ok(out)
    }

    /// Same terms, different signature. The blade-identical lift used by the
    /// classical (symbol-map) Poisson bracket.
    pub fn with_context(&self, context: Signature) -> Result<Element, Error> {
        if context.len() != self.context.len() {
            return Err(Error::DimensionMismatch {
                expected: self.context.len(),
                got: context.len(),
            });
        }
        Ok(Element {
            context,
            terms: self.terms.clone(),
        })
    }
}

/// Canonical text form: terms in ascending blade order, every coefficient
/// written explicitly. Round-trips through [`parse_element`].
pub fn format_element(f: &Element) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (b, c)) in f.terms().enumerate() {
        let mag = c.abs();
        if k == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&crate::rat_to_string(&mag));
        if *b != Blade::UNIT {
            out.push(' ');
            out.push_str(&b.to_string());
        }
    }
    out
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_element(self))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Plus,
    Minus,
    Slash,
    Number(num_bigint::BigInt),
    Factor(usize),
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>, Error> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => pos += 1,
            '+' => {
                tokens.push((pos, Token::Plus));
                pos += 1;
            }
            '-' => {
                tokens.push((pos, Token::Minus));
                pos += 1;
            }
            '/' => {
                tokens.push((pos, Token::Slash));
                pos += 1;
            }
            '0'..='9' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let n = text[start..pos].parse().map_err(|_| Error::Parse {
                    pos: start,
                    msg: "invalid number".into(),
                })?;
                tokens.push((start, Token::Number(n)));
            }
            'x' => {
                let start = pos;
                pos += 1;
                let digit_start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if digit_start == pos {
                    return Err(Error::Parse {
                        pos: start,
                        msg: "expected generator index after `x`".into(),
                    });
                }
                let i: usize = text[digit_start..pos].parse().map_err(|_| Error::Parse {
                    pos: start,
                    msg: "invalid generator index".into(),
                })?;
                tokens.push((start, Token::Factor(i)));
            }
            other => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(tokens)
}

/// Parse the element grammar:
/// `element := ["+"|"-"] term (("+"|"-") term)* | "0"` where
/// `term := [rational] {"x" integer}*` and the factors multiply left to right.
pub fn parse_element(text: &str, sig: &Signature) -> Result<Element, Error> {
    let tokens = lex(text)?;
    if tokens.is_empty() {
        return Err(Error::Parse {
            pos: 0,
            msg: "empty element".into(),
        });
    }
    let mut out = Element::zero(sig.clone());
    let mut idx = 0;
    loop {
        // optional leading sign on each term
        let mut sign = rat(1);
        while idx < tokens.len() {
            match tokens[idx].1 {
                Token::Plus => idx += 1,
                Token::Minus => {
                    sign = -sign;
                    idx += 1;
                }
                _ => break,
            }
        }
        if idx >= tokens.len() {
            let pos = tokens.last().map(|(p, _)| *p).unwrap_or(0);
            return Err(Error::Parse {
                pos,
                msg: "expected a term".into(),
            });
        }
        // optional rational
        let mut coeff = sign;
        let mut saw_number = false;
        if let Token::Number(ref n) = tokens[idx].1 {
            let mut r = Rat::from_integer(n.clone());
            idx += 1;
            saw_number = true;
            if idx < tokens.len() && tokens[idx].1 == Token::Slash {
                idx += 1;
                match tokens.get(idx) {
                    Some((_, Token::Number(d))) if !d.is_zero() => {
                        r /= Rat::from_integer(d.clone());
                        idx += 1;
                    }
                    _ => {
                        return Err(Error::Parse {
                            pos: tokens[idx - 1].0,
                            msg: "expected positive denominator after `/`".into(),
                        })
                    }
                }
            }
            coeff *= r;
        }
        // factors, multiplied left to right
        let mut term = Element::one(sig.clone());
        let mut saw_factor = false;
        while let Some((pos, Token::Factor(i))) = tokens.get(idx) {
            if *i == 0 || *i > sig.len() {
                return Err(Error::Parse {
                    pos: *pos,
                    msg: format!("generator index {i} out of range for n = {}", sig.len()),
                });
            }
            term = term.mul(&Element::generator(sig.clone(), *i).unwrap());
            saw_factor = true;
            idx += 1;
        }
        if !saw_number && !saw_factor {
            return Err(Error::Parse {
                pos: tokens[idx].0,
                msg: "expected a rational or a generator factor".into(),
            });
        }
        out = out.add(&term.scale(&coeff));
        if idx >= tokens.len() {
            break;
        }
        match tokens[idx].1 {
            Token::Plus | Token::Minus => {}
            _ => {
                return Err(Error::Parse {
                    pos: tokens[idx].0,
                    msg: "expected `+` or `-` between terms".into(),
                })
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    /// Brute-force sign oracle: multiply monomials as letter lists, sorting by
    /// adjacent transpositions and contracting equal neighbours with the
    /// signature factor. Pins the sign convention independently of the
    /// bitmask arithmetic.
    fn oracle_blade_product(b1: Blade, b2: Blade, sig: &Signature) -> (i64, Blade) {
        let mut letters: Vec<usize> = b1.indices().chain(b2.indices()).collect();
        let mut scale: i64 = 1;
        loop {
            let mut changed = false;
            for k in 0..letters.len().saturating_sub(1) {
                if letters[k] > letters[k + 1] {
                    letters.swap(k, k + 1);
                    scale = -scale;
                    changed = true;
                } else if letters[k] == letters[k + 1] {
                    scale *= i64::from(sig.square(letters[k]));
                    letters.drain(k..k + 2);
                    changed = true;
                    break;
                }
            }
            if !changed {
                break;
            }
        }
        if scale == 0 {
            return (0, Blade::UNIT);
        }
        (scale, Blade::from_indices(&letters))
    }

    #[test]
    fn blade_product_matches_oracle_exhaustively() {
        let sigs = [
            Signature::cliff(5),
            Signature::cliff_neg(5),
            Signature::grassmann(5),
            Signature::new(vec![-1, 0, 1, -1, 1]).unwrap(),
        ];
        for sig in &sigs {
            for a in 0u64..32 {
                for b in 0u64..32 {
                    let (s, blade) = blade_product(Blade(a), Blade(b), sig).unwrap();
                    let (os, oblade) = oracle_blade_product(Blade(a), Blade(b), sig);
                    assert_eq!((i64::from(s), blade), (os, oblade), "a={a:#b} b={b:#b}");
                }
            }
        }
    }

    #[test]
    fn blade_product_known_cases() {
        let cliff = Signature::cliff(2);
        let gr = Signature::grassmann(2);
        let x1 = Blade::from_indices(&[1]);
        let x2 = Blade::from_indices(&[2]);
        assert_eq!(blade_product(x1, x1, &cliff).unwrap(), (-1, Blade::UNIT));
        assert_eq!(
            blade_product(x1, x2, &cliff).unwrap(),
            (1, Blade::from_indices(&[1, 2]))
        );
        assert_eq!(
            blade_product(x2, x1, &cliff).unwrap(),
            (-1, Blade::from_indices(&[1, 2]))
        );
        assert_eq!(blade_product(x1, x1, &gr).unwrap(), (0, Blade::UNIT));
    }

    #[test]
    fn blade_product_rejects_out_of_range() {
        let sig = Signature::cliff(2);
        let err = blade_product(Blade::from_indices(&[3]), Blade::UNIT, &sig).unwrap_err();
        assert!(matches!(err, Error::IndexOutOfRange { index: 3, n: 2 }));
    }

    #[test]
    fn generator_squares_match_signature() {
        let sig = Signature::new(vec![-1, 0, 1]).unwrap();
        for i in 1..=3 {
            let x = Element::generator(sig.clone(), i).unwrap();
            let sq = x.mul(&x);
            assert_eq!(sq, Element::one(sig.clone()).scale(&rat(sig.square(i).into())));
        }
    }

    #[test]
    fn quaternion_like_square_in_cliff4() {
        // a+ = 1/2 (wx + yz) squares to (theta - 1)/2 in Cliff(4).
        let sig = Signature::cliff(4);
        let a_plus = parse_element("1/2 x1 x2 + 1/2 x3 x4", &sig).unwrap();
        let sq = a_plus.mul(&a_plus);
        let expected = parse_element("1/2 x1 x2 x3 x4 - 1/2", &sig).unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn mul_unit_law_and_derived_case() {
        let sig = Signature::cliff(4);
        let f = parse_element("2 x1 + 1/3 x2 x3 - x4", &sig).unwrap();
        assert_eq!(Element::one(sig.clone()).mul(&f), f);
        // (wx)(wy) = xy in Cliff(4)
        let wx = parse_element("x1 x2", &sig).unwrap();
        let wy = parse_element("x1 x3", &sig).unwrap();
        assert_eq!(wx.mul(&wy), parse_element("x2 x3", &sig).unwrap());
    }

    #[test]
    fn mul_rejects_mismatched_contexts() {
        let f = Element::one(Signature::cliff(2));
        let g = Element::one(Signature::cliff(3));
        assert!(matches!(
            f.checked_mul(&g),
            Err(Error::ContextMismatch { .. })
        ));
    }

    #[test]
    fn supercommutator_of_generators() {
        let sig = Signature::cliff(3);
        for i in 1..=3 {
            for j in 1..=3 {
                let xi = Element::generator(sig.clone(), i).unwrap();
                let xj = Element::generator(sig.clone(), j).unwrap();
                let bracket = xi.supercommutator(&xj);
                let expected = if i == j {
                    Element::one(sig.clone()).scale(&rat(-2))
                } else {
                    Element::zero(sig.clone())
                };
                assert_eq!(bracket, expected, "[x{i}, x{j}]");
            }
        }
    }

    #[test]
    fn spin3_bracket_and_commuting_actions() {
        let sig = Signature::cliff(4);
        let a_plus = parse_element("1/2 x1 x2 + 1/2 x3 x4", &sig).unwrap();
        let b_plus = parse_element("1/2 x1 x3 - 1/2 x2 x4", &sig).unwrap();
        let b_minus = parse_element("1/2 x1 x3 + 1/2 x2 x4", &sig).unwrap();
        let c_plus = parse_element("1/2 x1 x4 + 1/2 x2 x3", &sig).unwrap();
        assert_eq!(a_plus.supercommutator(&b_plus), c_plus.scale(&rat(2)));
        assert!(a_plus.supercommutator(&b_minus).is_zero());
    }

    #[test]
    fn parity_decompose_cases() {
        let sig = Signature::cliff(4);
        let f = parse_element("x1 x2 x3 x4 + x1", &sig).unwrap();
        let (even, odd) = f.parity_decompose();
        assert_eq!(even, parse_element("x1 x2 x3 x4", &sig).unwrap());
        assert_eq!(odd, parse_element("x1", &sig).unwrap());
        let z = Element::zero(sig.clone());
        let (ze, zo) = z.parity_decompose();
        assert!(ze.is_zero() && zo.is_zero());
        assert_eq!(z.parity(), Some(Parity::Even));
    }

    #[test]
    fn odd_partial_cases() {
        let sig = Signature::grassmann(7);
        let eps = parse_element(
            "x1 x2 x3 + x1 x4 x5 + x1 x6 x7 + x2 x4 x6 + x2 x7 x5 + x3 x7 x4 + x3 x6 x5",
            &sig,
        )
        .unwrap();
        let e1 = eps.odd_partial(1).unwrap();
        assert_eq!(
            e1,
            parse_element("x2 x3 + x4 x5 + x6 x7", &sig).unwrap()
        );
        let x1 = parse_element("x1", &sig).unwrap();
        assert_eq!(x1.odd_partial(1).unwrap(), Element::one(sig.clone()));
        let x12 = parse_element("x1 x2", &sig).unwrap();
        assert_eq!(
            x12.odd_partial(2).unwrap(),
            parse_element("-1 x1", &sig).unwrap()
        );
        assert!(x1.odd_partial(8).is_err());
    }

    #[test]
    fn odd_partial_sign_oracle() {
        // Independent sign rule: count preceding letters one by one.
        let sig = Signature::grassmann(6);
        for mask in 0u64..64 {
            let b = Blade(mask);
            for i in 1..=6 {
                let f = Element::from_blade(sig.clone(), b, rat(1));
                let d = f.odd_partial(i).unwrap();
                if !b.contains(i) {
                    assert!(d.is_zero());
                } else {
                    let letters: Vec<usize> = b.indices().collect();
                    let k = letters.iter().position(|&j| j == i).unwrap();
                    let rest: Vec<usize> =
                        letters.iter().copied().filter(|&j| j != i).collect();
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    assert_eq!(
                        d,
                        Element::from_blade(sig.clone(), Blade::from_indices(&rest), rat(sign))
                    );
                }
            }
        }
    }

    #[test]
    fn parse_and_format_round_trips() {
        let sig = Signature::cliff(4);
        let a = parse_element("1/2 x1 x2 + 1/2 x3 x4", &sig).unwrap();
        assert_eq!(format_element(&a), "1/2 x1 x2 + 1/2 x3 x4");
        assert_eq!(parse_element(&format_element(&a), &sig).unwrap(), a);
        assert_eq!(
            format_element(&parse_element("x2 x1", &sig).unwrap()),
            "-1 x1 x2"
        );
        let zero = parse_element("0", &sig).unwrap();
        assert!(zero.is_zero());
        assert_eq!(format_element(&zero), "0");
        let half = parse_element("-1/2", &sig).unwrap();
        assert_eq!(half.coeff(Blade::UNIT), ratio(-1, 2));
        assert_eq!(format_element(&half), "-1/2");
    }

    #[test]
    fn parse_errors_carry_positions() {
        let sig = Signature::cliff(2);
        match parse_element("x1 + ?", &sig) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(
            parse_element("x3", &sig),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_element("1/0", &sig),
            Err(Error::Parse { .. })
        ));
        assert!(parse_element("", &sig).is_err());
    }

    #[test]
    fn parse_contracts_repeated_factors() {
        let sig = Signature::cliff_pq(1, 1);
        assert_eq!(
            parse_element("x1 x1", &sig).unwrap(),
            Element::one(sig.clone()).neg()
        );
        assert_eq!(
            parse_element("x2 x2", &sig).unwrap(),
            Element::one(sig.clone())
        );
    }
}
