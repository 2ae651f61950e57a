//! Twist words and the continued fraction `[a1, ..., an, 0]` they encode.
//!
//! The evaluation convention puts `a1` innermost:
//!
//! ```text
//! inner(a1)         = a1
//! inner(a1, ..., am) = am + 1 / inner(a1, ..., a(m-1))
//! r                 = 1 / inner(a1, ..., an)
//! ```
//!
//! with the empty word evaluating to `0`. So `[3]` gives `1/3` and `[2, 2]`
//! gives `2/5`.

use std::fmt;
use std::str::FromStr;

use crate::error::FractionError;
use crate::fraction::GenericFraction;
use crate::scalar::Int;

/// Diagram form of a twist word: odd and even lengths are drawn differently
/// so that the disk side of the 2-string tangle stays in place.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Layout {
    OddForm,
    EvenForm,
}

impl Layout {
    pub fn for_len(len: usize) -> Self {
        if len % 2 == 1 {
            Layout::OddForm
        } else {
            Layout::EvenForm
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Layout::OddForm => "odd-form",
            Layout::EvenForm => "even-form",
        }
    }
}

/// Sequence of twist-box counts `a1, ..., an`. Zero entries are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistWord<T> {
    entries: Vec<T>,
    layout: Layout,
}

impl<T: Int> TwistWord<T> {
    pub fn new(entries: Vec<T>) -> Self {
        let layout = Layout::for_len(entries.len());
        Self { entries, layout }
    }

    /// Builds a word with an explicit layout, which must agree with the
    /// parity of the length.
    pub fn with_layout(entries: Vec<T>, layout: Layout) -> Result<Self, FractionError> {
        if Layout::for_len(entries.len()) != layout {
            return Err(FractionError::LayoutMismatch {
                layout: layout.name(),
                len: entries.len(),
            });
        }
        Ok(Self { entries, layout })
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn negated(&self) -> Result<Self, FractionError> {
        let entries = self
            .entries
            .iter()
            .map(|a| a.checked_negate().ok_or(FractionError::Overflow))
            .collect::<Result<_, _>>()?;
        Ok(Self {
            entries,
            layout: self.layout,
        })
    }
}

impl<T: Int> fmt::Display for TwistWord<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl<T: Int> FromStr for TwistWord<T> {
    type Err = FractionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let s = s
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .unwrap_or(s);
        if s.trim().is_empty() {
            return Ok(Self::new(Vec::new()));
        }
        let entries = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<T>()
                    .map_err(|_| FractionError::ParseWord(s.to_string()))
            })
            .collect::<Result<_, _>>()?;
        Ok(Self::new(entries))
    }
}

/// Value `r` of the continued fraction `[a1, ..., an, 0]`.
///
/// Fails with [`FractionError::InfiniteValue`] as soon as a partial value
/// that must be inverted is zero.
pub fn cf_eval<T: Int>(word: &TwistWord<T>) -> Result<GenericFraction<T>, FractionError> {
    let mut inner: Option<GenericFraction<T>> = None;
    for a in word.entries() {
        let a = GenericFraction::from_integer(a.clone());
        inner = Some(match inner {
            None => a,
            Some(prev) => a
                .checked_add(&prev.recip()?)
                .ok_or(FractionError::Overflow)?,
        });
    }
    match inner {
        None => Ok(GenericFraction::zero()),
        Some(inner) => inner.recip(),
    }
}

/// Canonical twist word for `r`, the inverse of [`cf_eval`].
///
/// For `r > 0` the word is the reversed regular continued fraction of `1/r`
/// (all entries positive except a possible final `0` when `r > 1`); for
/// `r < 0` it is the negation of the word for `-r`.
pub fn cf_expand<T: Int>(r: &GenericFraction<T>) -> Result<TwistWord<T>, FractionError> {
    if r.is_zero() {
        return Ok(TwistWord::new(Vec::new()));
    }
    if r.is_negative() {
        let pos = r.checked_neg().ok_or(FractionError::Overflow)?;
        return cf_expand(&pos)?.negated();
    }
    // Euclid on 1/r = den/num.
    let (mut p, mut q) = (r.denom().clone(), r.numer().clone());
    let mut terms = Vec::new();
    while !q.is_zero() {
        let (quot, rem) = p.div_rem(&q);
        terms.push(quot);
        p = q;
        q = rem;
    }
    terms.reverse();
    Ok(TwistWord::new(terms))
}
