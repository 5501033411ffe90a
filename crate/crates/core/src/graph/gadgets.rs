//! Fixed graphs and parameterized families that certify upper bounds.
//!
//! Vertex numbering follows the node order of the original drawings:
//!
//! * `upper_left`: the 2-cycle `1 <-> 2`. `upper_right`: the same pair with
//!   vertex 1's nomination removed, i.e. the single edge `2 -> 1`. The two
//!   graphs differ only in vertex 1's outgoing edges, so any impartial
//!   mechanism selects vertex 1 with the same probability in both.
//! * `perm_up`: two 2-cycles `1 <-> 2`, `3 <-> 4` plus `3 -> 2`, `4 -> 2`.
//!   Vertex 2 is the hub with indegree 3.
//! * `oneplus3_{a,b}`, `oneplus4_{a,b,c}`, `oneplus5_{a..f}`,
//!   `oneplus7_{a..e}`: the graphs without abstentions used for the bounds
//!   `3/4` (n = 3) and `(3n-1)/4n`. Vertices 1.. are numbered as in the
//!   drawings (triangle: top-left, top-right, bottom; square: clockwise from
//!   top-left; pentagon: counter-clockwise from the upper-left node; the
//!   seven-vertex drawings: two stacked squares `1 2 / 3 4` above the
//!   triangle `5, 6, 7`).
//! * `oneplus4_*` take any even `n >= 4` and `oneplus7_*` any odd `n >= 7`;
//!   the extra agents form mutual pairs `(5,6), (7,8), ...` and
//!   `(8,9), (10,11), ...` respectively.
//! * `single_edge(n)`: `1 -> 2` plus `n - 2` isolated vertices.
//! * `cycle_plus(n)`: the path `1 -> 2 -> ... -> n-1`, closed by `n-1 -> 1`,
//!   plus `n -> 1`. Every vertex has outdegree one and vertex 1 indegree two.
//! * `pair_matching(n)`: mutual pairs `(1,2), (3,4), ...` for even `n`.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::str::FromStr;

use super::Graph;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gadget {
    UpperLeft,
    UpperRight,
    PermUp,
    OnePlus3A,
    OnePlus3B,
    OnePlus4A,
    OnePlus4B,
    OnePlus4C,
    OnePlus5A,
    OnePlus5B,
    OnePlus5C,
    OnePlus5D,
    OnePlus5E,
    OnePlus5F,
    OnePlus7A,
    OnePlus7B,
    OnePlus7C,
    OnePlus7D,
    OnePlus7E,
    SingleEdge,
    CyclePlus,
    PairMatching,
}

pub const GADGET_NAMES: [&str; 22] = [
    "upper_left",
    "upper_right",
    "perm_up",
    "oneplus3_a",
    "oneplus3_b",
    "oneplus4_a",
    "oneplus4_b",
    "oneplus4_c",
    "oneplus5_a",
    "oneplus5_b",
    "oneplus5_c",
    "oneplus5_d",
    "oneplus5_e",
    "oneplus5_f",
    "oneplus7_a",
    "oneplus7_b",
    "oneplus7_c",
    "oneplus7_d",
    "oneplus7_e",
    "single_edge",
    "cycle_plus",
    "pair_matching",
];

const ALL: [Gadget; 22] = [
    Gadget::UpperLeft,
    Gadget::UpperRight,
    Gadget::PermUp,
    Gadget::OnePlus3A,
    Gadget::OnePlus3B,
    Gadget::OnePlus4A,
    Gadget::OnePlus4B,
    Gadget::OnePlus4C,
    Gadget::OnePlus5A,
    Gadget::OnePlus5B,
    Gadget::OnePlus5C,
    Gadget::OnePlus5D,
    Gadget::OnePlus5E,
    Gadget::OnePlus5F,
    Gadget::OnePlus7A,
    Gadget::OnePlus7B,
    Gadget::OnePlus7C,
    Gadget::OnePlus7D,
    Gadget::OnePlus7E,
    Gadget::SingleEdge,
    Gadget::CyclePlus,
    Gadget::PairMatching,
];

enum Size {
    Fixed(usize),
    Even { min: usize },
    Odd { min: usize },
    Required { min: usize },
    RequiredEven { min: usize },
}

impl Gadget {
    pub fn all() -> &'static [Gadget] {
        &ALL
    }

    pub fn name(self) -> &'static str {
        GADGET_NAMES[ALL.iter().position(|&g| g == self).expect("listed")]
    }

    pub fn oneplus5() -> [Gadget; 6] {
        use Gadget::*;
        [OnePlus5A, OnePlus5B, OnePlus5C, OnePlus5D, OnePlus5E, OnePlus5F]
    }

    fn size(self) -> Size {
        use Gadget::*;
        match self {
            UpperLeft | UpperRight => Size::Fixed(2),
            OnePlus3A | OnePlus3B => Size::Fixed(3),
            PermUp => Size::Fixed(4),
            OnePlus5A | OnePlus5B | OnePlus5C | OnePlus5D | OnePlus5E | OnePlus5F => Size::Fixed(5),
            OnePlus4A | OnePlus4B | OnePlus4C => Size::Even { min: 4 },
            OnePlus7A | OnePlus7B | OnePlus7C | OnePlus7D | OnePlus7E => Size::Odd { min: 7 },
            SingleEdge => Size::Required { min: 2 },
            CyclePlus => Size::Required { min: 3 },
            PairMatching => Size::RequiredEven { min: 2 },
        }
    }

    /// Edges of the fixed core as 1-based pairs.
    fn core_edges(self) -> &'static [(u32, u32)] {
        use Gadget::*;
        match self {
            UpperLeft => &[(1, 2), (2, 1)],
            UpperRight => &[(2, 1)],
            PermUp => &[(1, 2), (2, 1), (3, 4), (4, 3), (3, 2), (4, 2)],
            OnePlus3A => &[(3, 1), (3, 2), (1, 2), (2, 1)],
            OnePlus3B => &[(2, 1), (3, 2), (1, 3), (3, 1)],
            OnePlus4A => &[(1, 2), (2, 1), (3, 4), (4, 3)],
            OnePlus4B => &[(3, 4), (4, 1), (4, 2), (1, 2), (2, 1)],
            OnePlus4C => &[(1, 2), (2, 3), (3, 4), (4, 1), (4, 2)],
            OnePlus5A => &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)],
            OnePlus5B => &[(4, 5), (5, 1), (1, 2), (2, 3), (3, 2)],
            OnePlus5C => &[(5, 1), (1, 2), (4, 3), (2, 3), (3, 2)],
            OnePlus5D => &[(4, 5), (5, 1), (1, 2), (1, 3), (3, 2), (2, 3)],
            OnePlus5E => &[(5, 1), (1, 2), (2, 4), (4, 3), (3, 2)],
            OnePlus5F => &[(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 1)],
            OnePlus7A => &[(5, 7), (7, 6), (6, 5), (1, 2), (2, 1), (3, 4), (4, 3)],
            OnePlus7B => &[(3, 1), (3, 2), (4, 3), (5, 7), (7, 6), (6, 5), (1, 2), (2, 1)],
            OnePlus7C => &[(5, 3), (5, 4), (7, 6), (6, 5), (1, 2), (2, 1), (3, 4), (4, 3)],
            OnePlus7D => &[(1, 2), (2, 4), (4, 3), (3, 1), (3, 2), (5, 7), (7, 6), (6, 5)],
            OnePlus7E => &[(3, 4), (4, 7), (5, 3), (5, 4), (6, 5), (7, 6), (1, 2), (2, 1)],
            SingleEdge => &[(1, 2)],
            CyclePlus | PairMatching => &[],
        }
    }

    /// Builds the gadget. Fixed-size gadgets accept `None` or their own size.
    pub fn build(self, n: Option<usize>) -> Result<Graph> {
        let name = self.name();
        let bad = |n, reason| Err(Error::InvalidGadgetSize { name, n, reason });
        let n = match (self.size(), n) {
            (Size::Fixed(m), None) => m,
            (Size::Fixed(m), Some(n)) if n == m => m,
            (Size::Fixed(_), Some(n)) => return bad(n, "fixed-size gadget"),
            (Size::Even { min }, None) | (Size::Odd { min }, None) => min,
            (Size::Even { min }, Some(n)) if n < min || n % 2 == 1 => return bad(n, "needs an even n >= 4"),
            (Size::Odd { min }, Some(n)) if n < min || n % 2 == 0 => return bad(n, "needs an odd n >= 7"),
            (Size::Even { .. }, Some(n)) | (Size::Odd { .. }, Some(n)) => n,
            (Size::Required { .. }, None) | (Size::RequiredEven { .. }, None) => return bad(0, "n is required"),
            (Size::Required { min }, Some(n)) if n < min => return bad(n, "n too small"),
            (Size::RequiredEven { min }, Some(n)) if n < min || n % 2 == 1 => return bad(n, "needs an even n >= 2"),
            (Size::Required { .. }, Some(n)) | (Size::RequiredEven { .. }, Some(n)) => n,
        };

        let mut edges: Vec<(u32, u32)> = self.core_edges().to_vec();
        let nn = n as u32;
        match self {
            Gadget::CyclePlus => {
                edges.extend((1..nn - 1).map(|i| (i, i + 1)));
                edges.push((nn - 1, 1));
                edges.push((nn, 1));
            }
            Gadget::PairMatching => mutual_pairs(&mut edges, 1, nn),
            Gadget::OnePlus4A | Gadget::OnePlus4B | Gadget::OnePlus4C => mutual_pairs(&mut edges, 5, nn),
            Gadget::OnePlus7A | Gadget::OnePlus7B | Gadget::OnePlus7C | Gadget::OnePlus7D | Gadget::OnePlus7E => {
                mutual_pairs(&mut edges, 8, nn)
            }
            _ => {}
        }
        Graph::new(n, edges)
    }
}

fn mutual_pairs(edges: &mut Vec<(u32, u32)>, first: u32, n: u32) {
    let mut a = first;
    while a < n {
        edges.push((a, a + 1));
        edges.push((a + 1, a));
        a += 2;
    }
}

impl FromStr for Gadget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GADGET_NAMES
            .iter()
            .position(|&name| name == s)
            .map(|i| ALL[i])
            .ok_or_else(|| Error::UnknownGadget(s.to_string()))
    }
}

/// Looks up a gadget by name and builds it.
pub fn gen_gadget(name: &str, n: Option<usize>) -> Result<Graph> {
    name.parse::<Gadget>()?.build(n)
}
