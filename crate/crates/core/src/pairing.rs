//! Strand connectivity of the 2-string part of a rational tau-tangle.
//!
//! The four endpoints sit at the corners of the twist diagram: the cone ends
//! `y` (NW) and `z` (SW) on the left, and the two points `D1` (NE), `D2` (SE)
//! where the strands cross the splitting disk on the right. Starting from the
//! two horizontal arcs, each twist box `a` half-twists the right-hand corners
//! `|a|` times and is followed by a reflection in the NW-SE diagonal; this
//! mirrors the evaluation order of [`crate::contfrac::cf_eval`] without
//! touching any arithmetic beyond parity.

use std::fmt;

use crate::contfrac::TwistWord;
use crate::scalar::Int;

const NW: usize = 0;
const NE: usize = 1;
const SW: usize = 2;
const SE: usize = 3;

const Y: usize = NW;
const D1: usize = NE;
const Z: usize = SW;
const D2: usize = SE;

/// Which endpoints the two strands join.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EndpointPairing {
    /// `y-D1` and `z-D2`.
    Straight,
    /// `y-D2` and `z-D1`.
    Crossed,
    /// `D1-D2` and `y-z`: the strands through the disk close up with the
    /// cone arms into a cycle.
    DiskToDisk,
}

impl EndpointPairing {
    /// Each disk point reaches one of the cone ends `y`, `z`.
    pub fn is_cone(self) -> bool {
        !matches!(self, EndpointPairing::DiskToDisk)
    }
}

impl fmt::Display for EndpointPairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EndpointPairing::Straight => "{y-D1, z-D2}",
            EndpointPairing::Crossed => "{y-D2, z-D1}",
            EndpointPairing::DiskToDisk => "{D1-D2, y-z}",
        })
    }
}

/// Perfect matching on the four corners; `partner[i]` is joined to `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Matching {
    partner: [usize; 4],
}

impl Matching {
    fn horizontal() -> Self {
        let mut partner = [0; 4];
        for (a, b) in [(NW, NE), (SW, SE)] {
            partner[a] = b;
            partner[b] = a;
        }
        Self { partner }
    }

    /// Moves the strand ends sitting at corners `a` and `b` onto each other's
    /// corner.
    fn swap_corners(self, a: usize, b: usize) -> Self {
        let relabel = |i: usize| {
            if i == a {
                b
            } else if i == b {
                a
            } else {
                i
            }
        };
        let mut partner = [0; 4];
        for i in 0..4 {
            partner[relabel(i)] = relabel(self.partner[i]);
        }
        Self { partner }
    }
}

/// Endpoint pairing of the tangle drawn from `word`.
pub fn endpoint_pairing<T: Int>(word: &TwistWord<T>) -> EndpointPairing {
    let mut m = Matching::horizontal();
    for a in word.entries() {
        if a.is_odd() {
            m = m.swap_corners(NE, SE);
        }
        m = m.swap_corners(NE, SW);
    }
    if m.partner[D1] == D2 {
        EndpointPairing::DiskToDisk
    } else if m.partner[Y] == D1 {
        debug_assert_eq!(m.partner[Z], D2);
        EndpointPairing::Straight
    } else {
        debug_assert_eq!(m.partner[Y], D2);
        EndpointPairing::Crossed
    }
}
