//! Input data: places of the totally real field above `p`, their splitting
//! behaviour in the CM field, and the local signatures attached to them.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Largest supported value of `m = a + b`.
pub const MAX_M: u32 = 4;

/// A signature `(a, b)` with `a + b = m`.
///
/// Values built with [`SignaturePair::normalized`] always satisfy `a <= b`;
/// [`SignaturePair::new`] keeps the raw order so validation can reject it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignaturePair {
    pub a: u32,
    pub b: u32,
}

impl SignaturePair {
    pub const fn new(a: u32, b: u32) -> Self {
        SignaturePair { a, b }
    }

    pub fn normalized(a: u32, b: u32) -> Self {
        if a <= b {
            SignaturePair { a, b }
        } else {
            SignaturePair { a: b, b: a }
        }
    }

    pub fn normalize(self) -> Self {
        SignaturePair::normalized(self.a, self.b)
    }

    pub fn conjugate(self) -> Self {
        SignaturePair {
            a: self.b,
            b: self.a,
        }
    }

    pub fn is_normalized(self) -> bool {
        self.a <= self.b
    }

    pub fn m(self) -> u32 {
        self.a + self.b
    }

    /// Every normalized signature with `1 <= a + b <= MAX_M`, ordered by `m`
    /// then `a`.
    pub fn all_normalized() -> Vec<SignaturePair> {
        let mut out = Vec::new();
        for m in 1..=MAX_M {
            for a in 0..=m / 2 {
                out.push(SignaturePair::new(a, m - a));
            }
        }
        out
    }
}

impl fmt::Display for SignaturePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Behaviour of a prime of the totally real field in the CM extension.
/// `p` is unramified, so there is no third case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SplittingType {
    Split,
    Inert,
}

impl SplittingType {
    pub const ALL: [SplittingType; 2] = [SplittingType::Split, SplittingType::Inert];

    pub fn as_str(self) -> &'static str {
        match self {
            SplittingType::Split => "split",
            SplittingType::Inert => "inert",
        }
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PlaceSpec {
    pub splitting: SplittingType,
    pub signature: SignaturePair,
}

impl PlaceSpec {
    pub const fn new(splitting: SplittingType, a: u32, b: u32) -> Self {
        PlaceSpec {
            splitting,
            signature: SignaturePair::new(a, b),
        }
    }

    pub const fn inert(a: u32, b: u32) -> Self {
        PlaceSpec::new(SplittingType::Inert, a, b)
    }

    pub const fn split(a: u32, b: u32) -> Self {
        PlaceSpec::new(SplittingType::Split, a, b)
    }
}

impl fmt::Display for PlaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.splitting, self.signature)
    }
}

/// The prime `p` together with one [`PlaceSpec`] per place of the totally
/// real field above `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GlobalSpec {
    pub p: u64,
    pub places: Vec<PlaceSpec>,
}

impl GlobalSpec {
    pub fn new(p: u64, places: Vec<PlaceSpec>) -> Self {
        GlobalSpec { p, places }
    }

    /// Number of places `n`.
    pub fn n(&self) -> usize {
        self.places.len()
    }

    /// The common signature sum, read off the first place.
    pub fn m(&self) -> Option<u32> {
        self.places.first().map(|place| place.signature.m())
    }

    /// Number of places with the given splitting type and signature.
    pub fn count_places(&self, splitting: SplittingType, signature: SignaturePair) -> usize {
        self.places
            .iter()
            .filter(|place| place.splitting == splitting && place.signature == signature)
            .count()
    }

    pub fn signatures(&self) -> Vec<SignaturePair> {
        self.places.iter().map(|place| place.signature).collect()
    }
}

/// `ord_p(c(rho))`, the index of the open and closed piece `N^j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolarizationIndex(pub i64);

impl PolarizationIndex {
    pub fn is_odd(self) -> bool {
        self.0 % 2 != 0
    }
}

impl From<i64> for PolarizationIndex {
    fn from(j: i64) -> Self {
        PolarizationIndex(j)
    }
}

impl fmt::Display for PolarizationIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One violated standing hypothesis on a [`GlobalSpec`]. Place indices are
/// 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecViolation {
    NonOddPrime {
        p: u64,
    },
    EmptyPlaces,
    UnsupportedM {
        m: u32,
    },
    MixedSignatureSum {
        place: usize,
        sum: u32,
        expected: u32,
    },
    UnnormalizedSignature {
        place: usize,
        signature: SignaturePair,
    },
}

impl SpecViolation {
    pub fn name(&self) -> &'static str {
        match self {
            SpecViolation::NonOddPrime { .. } => "NonOddPrime",
            SpecViolation::EmptyPlaces => "EmptyPlaces",
            SpecViolation::UnsupportedM { .. } => "UnsupportedM",
            SpecViolation::MixedSignatureSum { .. } => "MixedSignatureSum",
            SpecViolation::UnnormalizedSignature { .. } => "UnnormalizedSignature",
        }
    }
}

impl fmt::Display for SpecViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecViolation::NonOddPrime { p } => write!(f, "NonOddPrime: {p} is not an odd prime"),
            SpecViolation::EmptyPlaces => write!(f, "EmptyPlaces: at least one place is required"),
            SpecViolation::UnsupportedM { m } => {
                write!(f, "UnsupportedM: m = {m} is outside 1..={MAX_M}")
            }
            SpecViolation::MixedSignatureSum {
                place,
                sum,
                expected,
            } => write!(
                f,
                "MixedSignatureSum: place {place} has a+b = {sum}, expected {expected}"
            ),
            SpecViolation::UnnormalizedSignature { place, signature } => write!(
                f,
                "UnnormalizedSignature: place {place} has signature {signature} with a > b"
            ),
        }
    }
}

/// Trial division; adequate for the primes this crate enumerates over.
pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Checks every standing hypothesis and reports all violations found.
pub fn validate_spec(spec: &GlobalSpec) -> Result<(), Vec<SpecViolation>> {
    let mut violations = Vec::new();
    if !is_odd_prime(spec.p) {
        violations.push(SpecViolation::NonOddPrime { p: spec.p });
    }
    match spec.m() {
        None => violations.push(SpecViolation::EmptyPlaces),
        Some(m) => {
            if !(1..=MAX_M).contains(&m) {
                violations.push(SpecViolation::UnsupportedM { m });
            }
            for (i, place) in spec.places.iter().enumerate() {
                let sum = place.signature.m();
                if sum != m {
                    violations.push(SpecViolation::MixedSignatureSum {
                        place: i + 1,
                        sum,
                        expected: m,
                    });
                }
            }
        }
    }
    for (i, place) in spec.places.iter().enumerate() {
        if !place.signature.is_normalized() {
            violations.push(SpecViolation::UnnormalizedSignature {
                place: i + 1,
                signature: place.signature,
            });
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchingError {
    LengthMismatch { expected: usize, found: usize },
    NotABijection,
}

impl fmt::Display for MatchingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchingError::LengthMismatch { expected, found } => {
                write!(
                    f,
                    "LengthMismatch: expected {expected} entries, found {found}"
                )
            }
            MatchingError::NotABijection => {
                write!(f, "NotABijection: permutation repeats an index")
            }
        }
    }
}

/// The bijection between archimedean and `p`-adic embeddings induced by a
/// choice of prime of the reflex field: place `i` of the local side reads
/// global place `permutation[i]` (0-based), with `a` and `b` exchanged when
/// `conjugated[i]` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureMatching {
    permutation: Vec<usize>,
    conjugated: Vec<bool>,
}

impl SignatureMatching {
    pub fn new(permutation: Vec<usize>, conjugated: Vec<bool>) -> Result<Self, MatchingError> {
        let n = permutation.len();
        if conjugated.len() != n {
            return Err(MatchingError::LengthMismatch {
                expected: n,
                found: conjugated.len(),
            });
        }
        let mut seen = vec![false; n];
        for &i in &permutation {
            if i >= n || seen[i] {
                return Err(MatchingError::NotABijection);
            }
            seen[i] = true;
        }
        Ok(SignatureMatching {
            permutation,
            conjugated,
        })
    }

    pub fn identity(n: usize) -> Self {
        SignatureMatching {
            permutation: (0..n).collect(),
            conjugated: vec![false; n],
        }
    }

    pub fn len(&self) -> usize {
        self.permutation.len()
    }

    pub fn is_empty(&self) -> bool {
        self.permutation.is_empty()
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn conjugated(&self) -> &[bool] {
        &self.conjugated
    }
}

/// Reads off the local signatures at a prime of the reflex field from the
/// global signatures. The result is a rearrangement of the input multiset.
pub fn localize_signatures(
    global: &[SignaturePair],
    matching: &SignatureMatching,
) -> Result<Vec<SignaturePair>, MatchingError> {
    if global.len() != matching.len() {
        return Err(MatchingError::LengthMismatch {
            expected: matching.len(),
            found: global.len(),
        });
    }
    Ok(matching
        .permutation
        .iter()
        .zip(&matching.conjugated)
        .map(|(&source, &conjugated)| {
            let sig = global[source];
            if conjugated {
                sig.conjugate().normalize()
            } else {
                sig.normalize()
            }
        })
        .collect())
}
