//! Signed monomials in the Clifford generators.
//!
//! A word `±J_{i1} J_{i2} … J_{im}` with strictly increasing indices is stored
//! as a bitmask plus a sign. Products follow `J_i J_j = −J_j J_i` for `i ≠ j`
//! and `J_i² = −ε_i`, where `ε_i = +1` for the first `r` generators and `−1`
//! for the remaining `s`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Largest supported `r + s`.
pub const MAX_GENERATORS: usize = 8;

/// The pair `(r, s)` indexing `ℝ^{r,s}` and `Cl_{r,s}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    r: usize,
    s: usize,
}

impl Signature {
    /// A signature with `1 ≤ r + s ≤ 8`.
    pub fn new(r: usize, s: usize) -> Result<Self> {
        let n = r.saturating_add(s);
        if n == 0 || n > MAX_GENERATORS {
            return Err(Error::SignatureRange { r, s });
        }
        Ok(Signature { r, s })
    }

    pub fn r(self) -> usize {
        self.r
    }

    pub fn s(self) -> usize {
        self.s
    }

    /// Number of generators `r + s`.
    pub fn n(self) -> usize {
        self.r + self.s
    }

    /// `ε_i = ⟨z_i, z_i⟩` for a 1-based generator index.
    pub fn epsilon(self, i: usize) -> i8 {
        debug_assert!((1..=self.n()).contains(&i));
        if i <= self.r {
            1
        } else {
            -1
        }
    }

    /// Every signature with `1 ≤ r + s ≤ 8`, ordered by `n`, then by `r` descending.
    pub fn all() -> Vec<Signature> {
        let mut out = Vec::new();
        for n in 1..=MAX_GENERATORS {
            for r in (0..=n).rev() {
                out.push(Signature { r, s: n - r });
            }
        }
        out
    }

    fn full_mask(self) -> u16 {
        (1u16 << self.n()) - 1
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.s)
    }
}

impl Serialize for Signature {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.r, self.s].serialize(serializer)
    }
}

/// A canonical signed monomial `±J_{i1}…J_{im}`, `i1 < … < im`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CliffordWord {
    negative: bool,
    mask: u16,
}

impl CliffordWord {
    pub const IDENTITY: CliffordWord = CliffordWord {
        negative: false,
        mask: 0,
    };

    /// The single generator `J_i` (1-based).
    pub fn generator(i: usize) -> Self {
        assert!(
            (1..=MAX_GENERATORS).contains(&i),
            "generator index {i} out of range"
        );
        CliffordWord {
            negative: false,
            mask: 1 << (i - 1),
        }
    }

    /// Word from a bitmask of letters (bit `i-1` is `J_i`).
    pub fn from_mask(sign: i8, mask: u16) -> Self {
        assert!(mask >> MAX_GENERATORS == 0, "mask has letters beyond J8");
        CliffordWord {
            negative: sign < 0,
            mask,
        }
    }

    /// Canonicalizes an arbitrary product `sign · J_{l1} J_{l2} …`, letters in
    /// any order and possibly repeated.
    pub fn from_letters(sign: i8, letters: &[usize], sig: Signature) -> Result<Self> {
        let mut acc = CliffordWord::from_mask(sign, 0);
        for &l in letters {
            if l == 0 || l > sig.n() {
                return Err(Error::LetterRange { letter: l, sig });
            }
            acc = word_mul(acc, CliffordWord::generator(l), sig)?;
        }
        Ok(acc)
    }

    pub fn sign(self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn mask(self) -> u16 {
        self.mask
    }

    pub fn len(self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.mask == 0
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }

    /// Strictly increasing 1-based letters.
    pub fn letters(self) -> Vec<usize> {
        (0..MAX_GENERATORS)
            .filter(|b| self.mask & (1 << b) != 0)
            .map(|b| b + 1)
            .collect()
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_GENERATORS).contains(&i) && self.mask & (1 << (i - 1)) != 0
    }

    /// The same letters with the given sign.
    pub fn with_sign(self, sign: i8) -> Self {
        CliffordWord {
            negative: sign < 0,
            mask: self.mask,
        }
    }

    /// The same letters with sign `+`.
    pub fn unsigned(self) -> Self {
        self.with_sign(1)
    }

    pub fn negate(self) -> Self {
        CliffordWord {
            negative: !self.negative,
            mask: self.mask,
        }
    }

    /// `Π_{i∈w} ε_i`, the factor by which the word scales the module form.
    pub fn norm(self, sig: Signature) -> i8 {
        let negative_letters = (self.mask >> sig.r()).count_ones();
        if negative_letters.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    fn check(self, sig: Signature) -> Result<()> {
        if self.mask & !sig.full_mask() != 0 {
            let letter = self
                .letters()
                .into_iter()
                .find(|&l| l > sig.n())
                .unwrap_or(0);
            return Err(Error::LetterRange { letter, sig });
        }
        Ok(())
    }
}

impl fmt::Display for CliffordWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        if self.mask == 0 {
            return f.write_str("1");
        }
        for l in self.letters() {
            write!(f, "J{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CliffordWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"1"`, `"-1"`, `"J1J3J6"`, `"-J2J5"`. Unsorted or repeated letters
/// are rejected because they need a signature to canonicalize; use
/// [`CliffordWord::from_letters`] for those.
impl FromStr for CliffordWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid word {text:?}"));
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text.strip_prefix('+').unwrap_or(text)),
        };
        if body == "1" {
            return Ok(CliffordWord { negative, mask: 0 });
        }
        if body.is_empty() {
            return Err(bad());
        }
        let mut mask = 0u16;
        let mut last = 0usize;
        for part in body.split('J').skip(1) {
            let l: usize = part.parse().map_err(|_| bad())?;
            if l == 0 || l > MAX_GENERATORS || l <= last {
                return Err(bad());
            }
            last = l;
            mask |= 1 << (l - 1);
        }
        if !body.starts_with('J') || mask == 0 {
            return Err(bad());
        }
        Ok(CliffordWord { negative, mask })
    }
}

impl Serialize for CliffordWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CliffordWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Number of pairs `(a, b)` with `a ∈ A`, `b ∈ B`, `a > b`: the transpositions
/// needed to sort the concatenation `A·B`.
fn crossings(a: u16, b: u16) -> u32 {
    let mut count = 0;
    let mut rest = b;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        count += (a >> (bit + 1)).count_ones();
        rest &= rest - 1;
    }
    count
}

/// Canonical product `a · b`.
pub fn word_mul(a: CliffordWord, b: CliffordWord, sig: Signature) -> Result<CliffordWord> {
    a.check(sig)?;
    b.check(sig)?;
    let mut negative = a.negative ^ b.negative ^ (crossings(a.mask, b.mask) % 2 == 1);
    // Each shared letter collapses to J_i² = −ε_i: −1 for positive letters.
    let shared = a.mask & b.mask;
    let shared_positive = (shared & ((1u16 << sig.r()) - 1)).count_ones();
    negative ^= shared_positive % 2 == 1;
    Ok(CliffordWord {
        negative,
        mask: a.mask ^ b.mask,
    })
}

/// Adjoint with respect to the module form: every letter is skew, so the
/// adjoint of `J_{i1}…J_{im}` is `(−1)^m J_{im}…J_{i1}`.
pub fn word_adjoint(w: CliffordWord, sig: Signature) -> Result<CliffordWord> {
    w.check(sig)?;
    let m = w.len();
    let reversal = (m * (m.saturating_sub(1)) / 2) % 2 == 1;
    let skew = m % 2 == 1;
    Ok(CliffordWord {
        negative: w.negative ^ reversal ^ skew,
        mask: w.mask,
    })
}

/// Inverse: `w · adjoint(w) = norm(w)`, so `w⁻¹ = norm(w) · adjoint(w)`.
pub fn word_inverse(w: CliffordWord, sig: Signature) -> Result<CliffordWord> {
    let adj = word_adjoint(w, sig)?;
    Ok(adj.with_sign(adj.sign() * w.norm(sig)))
}

/// `w · w`, always `±1`.
pub fn word_square(w: CliffordWord, sig: Signature) -> Result<i8> {
    Ok(word_mul(w, w, sig)?.sign())
}

/// Whether the letter sets of two words commute in the Clifford algebra.
pub fn words_commute(a: CliffordWord, b: CliffordWord) -> bool {
    let la = a.mask.count_ones();
    let lb = b.mask.count_ones();
    let shared = (a.mask & b.mask).count_ones();
    (la * lb - shared).is_multiple_of(2)
}

/// Isometric involution: squares to `+1` and preserves the module form.
pub fn is_isometric_involution(w: CliffordWord, sig: Signature) -> bool {
    !w.is_empty() && word_square(w, sig).ok() == Some(1) && w.norm(sig) == 1
}

/// An involution word together with the eigenvalue it must have on `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Involution {
    pub word: CliffordWord,
    pub eigensign: i8,
}

impl Involution {
    pub fn new(word: CliffordWord, eigensign: i8) -> Self {
        Involution { word, eigensign }
    }
}

/// The abelian group generated by a set of commuting involutions, with the
/// scalar each element takes on a common eigenvector.
#[derive(Clone, Debug)]
pub struct StabilizerGroup {
    sig: Signature,
    /// `(word, λ)` with `word · v = λ v`; one entry per subset of generators.
    elements: Vec<(CliffordWord, i8)>,
}

impl StabilizerGroup {
    pub fn new(involutions: &[Involution], sig: Signature) -> Result<Self> {
        for inv in involutions {
            if word_square(inv.word, sig)? != 1 {
                return Err(Error::Config(format!(
                    "{} squares to -1 in signature {sig}, not an involution",
                    inv.word
                )));
            }
            if inv.eigensign != 1 && inv.eigensign != -1 {
                return Err(Error::Config(format!(
                    "eigensign {} is not ±1",
                    inv.eigensign
                )));
            }
        }
        for (i, a) in involutions.iter().enumerate() {
            for b in &involutions[i + 1..] {
                if !words_commute(a.word, b.word) {
                    return Err(Error::Config(format!(
                        "involutions {} and {} do not commute",
                        a.word, b.word
                    )));
                }
            }
        }
        let mut elements = vec![(CliffordWord::IDENTITY, 1i8)];
        for inv in involutions {
            let mut next = elements.clone();
            for &(w, lambda) in &elements {
                next.push((word_mul(w, inv.word, sig)?, lambda * inv.eigensign));
            }
            elements = next;
        }
        Ok(StabilizerGroup { sig, elements })
    }

    /// Subset products in generation order: element `k` is the product of
    /// the involutions whose bit is set in `k`.
    pub fn elements(&self) -> &[(CliffordWord, i8)] {
        &self.elements
    }

    /// Whether the group is consistent: no element acts as `−1` while being
    /// the identity word (which would force `v = 0`).
    pub fn is_consistent(&self) -> bool {
        self.elements
            .iter()
            .all(|&(w, lambda)| !w.is_empty() || w.sign() == lambda)
    }

    /// `σ` with `w · v = σ v`, if the group forces it.
    pub fn resolve(&self, w: CliffordWord) -> Result<Option<i8>> {
        w.check(self.sig)?;
        Ok(self
            .elements
            .iter()
            .find(|(g, _)| g.mask() == w.mask())
            .map(|&(g, lambda)| w.sign() * g.sign() * lambda))
    }
}

/// Decides whether `w · v = ±v` follows from the involution relations.
pub fn reduce_mod_stabilizer(
    w: CliffordWord,
    involutions: &[Involution],
    sig: Signature,
) -> Result<Option<i8>> {
    StabilizerGroup::new(involutions, sig)?.resolve(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sig(r: usize, s: usize) -> Signature {
        Signature::new(r, s).unwrap()
    }

    fn w(text: &str) -> CliffordWord {
        text.parse().unwrap()
    }

    #[test]
    fn generator_squares() {
        let j1 = CliffordWord::generator(1);
        assert_eq!(word_mul(j1, j1, sig(2, 0)).unwrap(), w("-1"));
        let j2 = CliffordWord::generator(2);
        assert_eq!(word_mul(j2, j2, sig(1, 1)).unwrap(), w("1"));
    }

    #[test]
    fn one_swap() {
        let p = word_mul(w("J2"), w("J1"), sig(2, 0)).unwrap();
        assert_eq!(p, w("-J1J2"));
    }

    #[test]
    fn adjoint_examples() {
        let s = sig(2, 0);
        assert_eq!(word_adjoint(w("1"), s).unwrap(), w("1"));
        assert_eq!(word_adjoint(w("J1"), s).unwrap(), w("-J1"));
        assert_eq!(word_adjoint(w("J1J2"), s).unwrap(), w("-J1J2"));
        let by_hand = word_mul(w("J2"), w("J1"), s).unwrap();
        assert_eq!(word_adjoint(w("J1J2"), s).unwrap(), by_hand);
    }

    #[test]
    fn parse_and_display_round_trip() {
        for text in ["1", "-1", "J1", "-J1J3J6", "J2J4J5J7J8"] {
            assert_eq!(w(text).to_string(), text);
        }
        assert!("J3J1".parse::<CliffordWord>().is_err());
        assert!("J9".parse::<CliffordWord>().is_err());
        assert!("".parse::<CliffordWord>().is_err());
        assert!("-".parse::<CliffordWord>().is_err());
        assert!("X1".parse::<CliffordWord>().is_err());
    }

    #[test]
    fn out_of_range_letter() {
        assert!(matches!(
            word_mul(w("J3"), w("J1"), sig(2, 0)),
            Err(Error::LetterRange { letter: 3, .. })
        ));
        assert!(CliffordWord::from_letters(1, &[0], sig(2, 0)).is_err());
    }

    #[test]
    fn signature_range() {
        assert!(Signature::new(0, 0).is_err());
        assert!(Signature::new(9, 0).is_err());
        assert!(Signature::new(4, 5).is_err());
        assert_eq!(Signature::all().len(), 44);
    }

    #[test]
    fn stabilizer_examples() {
        let s = sig(4, 0);
        let p1 = Involution::new(w("J1J2J3J4"), 1);
        assert_eq!(reduce_mod_stabilizer(p1.word, &[p1], s).unwrap(), Some(1));
        assert_eq!(
            reduce_mod_stabilizer(w("-J1J2J3J4"), &[p1], s).unwrap(),
            Some(-1)
        );
        assert_eq!(reduce_mod_stabilizer(w("J1"), &[p1], s).unwrap(), None);
    }

    #[test]
    fn seven_generator_relation() {
        let s = sig(7, 0);
        let invs: Vec<Involution> = ["J1J2J3J4", "J1J2J5J6", "J1J3J5J7", "J5J6J7"]
            .iter()
            .map(|t| Involution::new(w(t), 1))
            .collect();
        assert_eq!(
            reduce_mod_stabilizer(w("-J1J2J7"), &invs, s).unwrap(),
            Some(1)
        );
    }

    #[test]
    fn six_generator_relation() {
        let s = sig(6, 0);
        let invs: Vec<Involution> = ["J1J2J3J4", "J1J2J5J6", "J1J4J5"]
            .iter()
            .map(|t| Involution::new(w(t), 1))
            .collect();
        assert_eq!(
            reduce_mod_stabilizer(w("J1J3J6"), &invs, s).unwrap(),
            Some(1)
        );
    }

    #[test]
    fn non_involution_is_a_config_error() {
        let s = sig(2, 0);
        let bad = Involution::new(w("J1"), 1);
        assert!(matches!(
            reduce_mod_stabilizer(w("J1"), &[bad], s),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn opposite_eigensigns_are_inconsistent() {
        let s = sig(3, 0);
        let a = Involution::new(w("J1J2J3"), 1);
        let b = Involution::new(w("J1J2J3"), -1);
        assert!(!StabilizerGroup::new(&[a, b], s).unwrap().is_consistent());
        assert!(StabilizerGroup::new(&[a], s).unwrap().is_consistent());
    }

    #[test]
    fn isometric_involutions_are_even_norm_words_of_length_zero_or_three_mod_four() {
        for sg in Signature::all() {
            for mask in 1u16..(1 << sg.n()) {
                let word = CliffordWord::from_mask(1, mask);
                let expected = matches!(word.len() % 4, 0 | 3) && word.norm(sg) == 1;
                assert_eq!(
                    is_isometric_involution(word, sg),
                    expected,
                    "{word} in {sg}"
                );
            }
        }
    }

    fn arb_sig() -> impl Strategy<Value = Signature> {
        (1usize..=8).prop_flat_map(|n| (0..=n).prop_map(move |r| Signature::new(r, n - r).unwrap()))
    }

    fn arb_word(sg: Signature) -> impl Strategy<Value = CliffordWord> {
        (any::<bool>(), 0u16..(1 << sg.n()))
            .prop_map(|(neg, mask)| CliffordWord::from_mask(if neg { -1 } else { 1 }, mask))
    }

    fn sig_and_words(k: usize) -> impl Strategy<Value = (Signature, Vec<CliffordWord>)> {
        arb_sig().prop_flat_map(move |sg| (Just(sg), proptest::collection::vec(arb_word(sg), k)))
    }

    /// The literal recipe: bubble-sort with a sign flip per swap, then
    /// collapse each adjacent equal pair to `−ε_i`, repeating until stable.
    fn bubble_sort_reference(letters: &[usize], sg: Signature) -> CliffordWord {
        let mut seq = letters.to_vec();
        let mut sign = 1i8;
        loop {
            let mut changed = false;
            for i in 0..seq.len().saturating_sub(1) {
                if seq[i] > seq[i + 1] {
                    seq.swap(i, i + 1);
                    sign = -sign;
                    changed = true;
                }
            }
            if let Some(i) = (0..seq.len().saturating_sub(1)).find(|&i| seq[i] == seq[i + 1]) {
                sign *= -sg.epsilon(seq[i]);
                seq.drain(i..i + 2);
                changed = true;
            }
            if !changed {
                break;
            }
        }
        let mask = seq.iter().fold(0u16, |m, &l| m | 1 << (l - 1));
        CliffordWord::from_mask(sign, mask)
    }

    fn sig_letters_and_shuffle() -> impl Strategy<Value = (Signature, Vec<usize>, Vec<usize>)> {
        arb_sig().prop_flat_map(|sg| {
            proptest::collection::vec(1..=sg.n(), 0..10).prop_flat_map(move |letters| {
                (
                    Just(sg),
                    Just(letters.clone()),
                    Just(letters).prop_shuffle(),
                )
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn product_is_associative((sg, ws) in sig_and_words(3)) {
            let left = word_mul(word_mul(ws[0], ws[1], sg).unwrap(), ws[2], sg).unwrap();
            let right = word_mul(ws[0], word_mul(ws[1], ws[2], sg).unwrap(), sg).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn canonical_form_matches_bubble_sort((sg, letters, shuffled) in sig_letters_and_shuffle()) {
            let a = CliffordWord::from_letters(1, &letters, sg).unwrap();
            let b = CliffordWord::from_letters(1, &shuffled, sg).unwrap();
            prop_assert_eq!(a, bubble_sort_reference(&letters, sg));
            prop_assert_eq!(b, bubble_sort_reference(&shuffled, sg));
            // A reordering of the same multiset lands on the same monomial;
            // only the anticommutation sign may differ.
            prop_assert_eq!(a.mask(), b.mask());
            let again = CliffordWord::from_letters(a.sign(), &a.letters(), sg).unwrap();
            prop_assert_eq!(again, a);
        }

        #[test]
        fn word_times_adjoint_is_its_norm((sg, ws) in sig_and_words(1)) {
            let p = word_mul(ws[0], word_adjoint(ws[0], sg).unwrap(), sg).unwrap();
            prop_assert!(p.is_empty());
            prop_assert_eq!(p.sign(), ws[0].norm(sg));
        }

        #[test]
        fn inverse_is_two_sided((sg, ws) in sig_and_words(1)) {
            let inv = word_inverse(ws[0], sg).unwrap();
            prop_assert_eq!(word_mul(ws[0], inv, sg).unwrap(), CliffordWord::IDENTITY);
            prop_assert_eq!(word_mul(inv, ws[0], sg).unwrap(), CliffordWord::IDENTITY);
        }

        #[test]
        fn commutation_predicate_agrees_with_products((sg, ws) in sig_and_words(2)) {
            let ab = word_mul(ws[0], ws[1], sg).unwrap();
            let ba = word_mul(ws[1], ws[0], sg).unwrap();
            prop_assert_eq!(ab == ba, words_commute(ws[0], ws[1]));
        }

        #[test]
        fn norm_is_multiplicative((sg, ws) in sig_and_words(2)) {
            let ab = word_mul(ws[0], ws[1], sg).unwrap();
            prop_assert_eq!(ab.norm(sg), ws[0].norm(sg) * ws[1].norm(sg));
        }
    }
}
