//! Published worked examples, kept as executable fixtures.
//!
//! Example 1 is a Parseval frame of length 5 for Z_2^4 with two odd vectors.
//! Example 2 is the rank-2 operator `S = [010;111;010]` at length 7.

use crate::frame::{AlphaVector, Frame};
use crate::gf2::{Gf2Matrix, SymmetricMatrix};
use crate::synthesis::{feasible, frame_with_operator, frame_with_operator_and_alpha, Reason};
use crate::symfactor::lempel_blocks;

/// Outcome of one fixture check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub fn example1_theta() -> Gf2Matrix {
    Gf2Matrix::from_strs(&["11001", "10101", "01101", "00010"])
}

pub fn example1_alpha() -> AlphaVector {
    AlphaVector::from_str_lit("00011")
}

pub fn example2_operator() -> SymmetricMatrix {
    SymmetricMatrix::from_strs(&["010", "111", "010"])
}

pub fn example2_l() -> SymmetricMatrix {
    SymmetricMatrix::from_strs(&["01", "11"])
}

pub fn example2_t() -> Gf2Matrix {
    Gf2Matrix::from_strs(&["100", "010", "101"])
}

/// The three length-7 frames of example 2 with their parity vectors.
pub fn example2_frames() -> [(&'static str, Gf2Matrix, AlphaVector); 3] {
    [
        (
            "F",
            Gf2Matrix::from_strs(&["1100000", "1000000", "1111000"]),
            AlphaVector::from_str_lit("1011000"),
        ),
        (
            "F1",
            Gf2Matrix::from_strs(&["1110100", "1010100", "0100100"]),
            AlphaVector::from_str_lit("0000100"),
        ),
        (
            "F2",
            Gf2Matrix::from_strs(&["1100000", "1000000", "1110111"]),
            AlphaVector::from_str_lit("1010111"),
        ),
    ]
}

fn check(name: &'static str, passed: bool, detail: impl Into<String>) -> FixtureCheck {
    FixtureCheck {
        name,
        passed,
        detail: detail.into(),
    }
}

/// Frame operator, spanning and parity vector of a fixture frame.
fn frame_check(name: &'static str, theta: &Gf2Matrix, s: &SymmetricMatrix, alpha: &AlphaVector) -> FixtureCheck {
    let f = Frame::from_synthesis(theta);
    let op = f.frame_operator();
    let diag = f.self_diag();
    let passed = &op == s && f.is_frame() && &diag == alpha;
    check(
        name,
        passed,
        format!("operator ok: {}, spans: {}, alpha = {diag}", &op == s, f.is_frame()),
    )
}

fn construct_check(name: &'static str, s: &SymmetricMatrix, alpha: &AlphaVector) -> FixtureCheck {
    match frame_with_operator_and_alpha(s, alpha) {
        Ok(f) => {
            let passed = &f.frame_operator() == s && f.is_frame() && &f.self_diag() == alpha;
            check(name, passed, format!("constructed {}", f.synthesis().to_text().trim().replace('\n', ";")))
        }
        Err(e) => check(name, false, e.to_string()),
    }
}

/// Runs every fixture check.
pub fn run_all() -> Vec<FixtureCheck> {
    let mut out = Vec::new();
    let i4 = SymmetricMatrix::identity(4);
    out.push(frame_check("example 1: Theta_F'", &example1_theta(), &i4, &example1_alpha()));
    out.push(construct_check("example 1: construct (I_4, 5, 00011)", &i4, &example1_alpha()));

    let s = example2_operator();
    out.push(check(
        "example 2: S is not parity indicative",
        !s.is_parity_indicative(),
        format!("rank {}", s.rank()),
    ));
    match lempel_blocks(&s) {
        Ok(b) => {
            out.push(check("example 2: P", b.p == Gf2Matrix::identity(3), format!("P = {:?}", b.perm)));
            out.push(check("example 2: L", b.l == example2_l(), format!("L = {}", b.l.matrix().to_text().trim().replace('\n', ";"))));
            out.push(check("example 2: T", b.t == example2_t(), format!("T = {}", b.t.to_text().trim().replace('\n', ";"))));
        }
        Err(e) => out.push(check("example 2: block decomposition", false, e.to_string())),
    }
    let frames = example2_frames();
    let base_ok = frame_with_operator(&s, 7).map(|f| f.synthesis() == frames[0].1);
    out.push(check(
        "example 2: minimal construction padded to 7",
        base_ok == Ok(true),
        format!("{base_ok:?}"),
    ));
    for (name, theta, alpha) in &frames {
        let label: &'static str = match *name {
            "F" => "example 2: Theta_F",
            "F1" => "example 2: Theta_F1",
            _ => "example 2: Theta_F2",
        };
        out.push(frame_check(label, theta, &s, alpha));
    }
    for (name, _, alpha) in &frames {
        let label: &'static str = match *name {
            "F" => "example 2: construct alpha",
            "F1" => "example 2: construct alpha_1",
            _ => "example 2: construct alpha_2",
        };
        out.push(construct_check(label, &s, alpha));
    }
    let report = feasible(&s, 7, 7);
    out.push(check(
        "example 2: seven odd vectors are unattainable",
        matches!(report, Ok(r) if r.reason == Reason::NotPiForbidsAllOdd),
        format!("{report:?}"),
    ));
    out
}
