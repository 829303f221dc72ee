//! Dual pairs and Parseval frames with prescribed dot products.
//!
//! A dual pair `(F, H)` with `(f_i, h_i) = alpha[i]` exists exactly when
//! `|alpha| = d (mod 2)`, since `|alpha| = Tr(Theta_H* Theta_F) = Tr(I_d)`.
//! Each constructor builds a canonical pair whose ones sit in a prefix and then
//! reorders it so that the ones land on the ones of `alpha`, ascending. Every
//! output is verified before it is returned.

use crate::error::{Error, Result};
use crate::frame::{AlphaVector, DualPair, Frame};
use crate::gf2::Gf2Vector;

/// A request for `K = alpha.len()` vectors in Z_2^d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualAlphaRequest {
    pub dim: usize,
    pub alpha: AlphaVector,
}

impl DualAlphaRequest {
    pub fn new(dim: usize, alpha: AlphaVector) -> Self {
        Self { dim, alpha }
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    /// Shape, parity and the `K = d` clause, in that order.
    pub fn validate(&self) -> Result<()> {
        let (d, k) = (self.dim, self.len());
        if d == 0 || k < d {
            return Err(Error::InvalidShape { dim: d, len: k });
        }
        check_parity(d, &self.alpha)?;
        if k == d && !self.alpha.is_all_ones() {
            return Err(Error::BasisForced { dim: d });
        }
        Ok(())
    }

    pub fn is_feasible(&self) -> bool {
        self.validate().is_ok()
    }
}

fn check_parity(dim: usize, alpha: &AlphaVector) -> Result<()> {
    let weight = alpha.weight();
    if weight % 2 != dim % 2 {
        return Err(Error::ParityMismatch { weight, dim });
    }
    Ok(())
}

/// Where the weight `m` sits relative to `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum WeightCase {
    Exact,
    Surplus(usize),
    Deficit(usize),
}

fn weight_case(dim: usize, m: usize) -> WeightCase {
    use std::cmp::Ordering::*;
    match m.cmp(&dim) {
        Equal => WeightCase::Exact,
        Greater => WeightCase::Surplus((m - dim) / 2),
        Less => WeightCase::Deficit((dim - m) / 2),
    }
}

fn e(dim: usize, i: usize) -> Gf2Vector {
    Gf2Vector::standard_basis(dim, i)
}

/// Permutation sending the ones of `canonical` to the ones of `target` and the
/// zeros to the zeros, both in ascending order. `perm[p]` is the canonical
/// index placed at output position `p`.
pub(crate) fn matching_permutation(canonical: &AlphaVector, target: &AlphaVector) -> Vec<usize> {
    assert_eq!(canonical.weight(), target.weight(), "weights must agree");
    let split = |a: &AlphaVector| -> (Vec<usize>, Vec<usize>) {
        (0..a.len()).partition(|&i| a.get(i))
    };
    let (c_ones, c_zeros) = split(canonical);
    let (t_ones, t_zeros) = split(target);
    let mut perm = vec![0; target.len()];
    for (&t, &c) in t_ones.iter().zip(&c_ones).chain(t_zeros.iter().zip(&c_zeros)) {
        perm[t] = c;
    }
    perm
}

/// Canonical pair with weight `m`, ones first. With `parseval` set the frame
/// is Parseval; the deficit case then needs `K >= d + 2`.
fn canonical_pair(dim: usize, len: usize, m: usize, parseval: bool) -> (Vec<Gf2Vector>, Vec<Gf2Vector>) {
    let zero = Gf2Vector::zeros(dim);
    let mut f: Vec<Gf2Vector> = (0..dim).map(|i| e(dim, i)).collect();
    f.resize(len, zero.clone());
    let mut h = f.clone();
    match weight_case(dim, m) {
        WeightCase::Exact => {}
        WeightCase::Surplus(t) => {
            // 2t extra copies of e_1 in both frames; the correction C has 2t
            // rows e_1*, which cancel in Theta_F C.
            for j in dim..dim + 2 * t {
                f[j] = e(dim, 0);
                h[j] = e(dim, 0);
            }
        }
        WeightCase::Deficit(t) => {
            // v = e_{d-2t+1} + ... + e_d is even; C repeats v* on rows
            // d-2t+1 ..= d+1, killing the last 2t cross products.
            let v = Gf2Vector::from_support(dim, dim - 2 * t..dim);
            f[dim] = v.clone();
            for j in dim - 2 * t..dim {
                h[j] = &h[j] + &v;
            }
            h[dim] = v.clone();
            if parseval {
                f[dim + 1] = v;
            }
        }
    }
    (f, h)
}

fn finish_pair(dim: usize, f: Vec<Gf2Vector>, h: Vec<Gf2Vector>, alpha: &AlphaVector) -> DualPair {
    let primal = Frame::new(dim, f).expect("canonical vectors have length d");
    let dual = Frame::new(dim, h).expect("canonical vectors have length d");
    let canonical = primal.cross_gram_diag(&dual).expect("same shape");
    let perm = matching_permutation(&canonical, alpha);
    let pair = DualPair {
        primal: primal.permute(&perm).expect("valid permutation"),
        dual: dual.permute(&perm).expect("valid permutation"),
    };
    assert!(
        pair.primal.is_dual(&pair.dual).unwrap(),
        "constructed pair is not dual"
    );
    assert_eq!(&pair.cross_diag(), alpha, "constructed pair misses alpha");
    pair
}

/// A dual pair `(F, H)` with `(f_i, h_i) = alpha[i]`.
///
/// Any filler vectors are zero, so `F` is the standard basis padded with
/// zeros plus, when needed, copies of `e_1` or one even vector.
pub fn dual_pair_with_alpha(req: &DualAlphaRequest) -> Result<DualPair> {
    req.validate()?;
    let (f, h) = canonical_pair(req.dim, req.len(), req.alpha.weight(), false);
    Ok(finish_pair(req.dim, f, h, &req.alpha))
}

/// Like [`dual_pair_with_alpha`] but `F` is additionally Parseval.
///
/// When `|alpha| < d` the canonical construction duplicates an even vector
/// and so needs `K >= d + 2`. At `K = d + 1` a nonzero `alpha` is served by a
/// self-dual Parseval frame from [`parseval_with_self_alpha`], and `alpha = 0`
/// is impossible: every Parseval frame of length `d + 1` with a dual killing
/// all cross products would consist of even vectors only.
pub fn parseval_with_dual_alpha(req: &DualAlphaRequest) -> Result<DualPair> {
    req.validate()?;
    let (d, k, m) = (req.dim, req.len(), req.alpha.weight());
    let pair = if m < d && k == d + 1 {
        if m == 0 {
            return Err(Error::ParsevalDualUnattainable { len: k });
        }
        let f = parseval_with_self_alpha(d, &req.alpha)?;
        DualPair {
            primal: f.clone(),
            dual: f,
        }
    } else {
        let (f, h) = canonical_pair(d, k, m, true);
        finish_pair(d, f, h, &req.alpha)
    };
    assert!(pair.primal.is_parseval(), "constructed frame is not Parseval");
    assert!(pair.primal.is_dual(&pair.dual).unwrap());
    assert_eq!(pair.cross_diag(), req.alpha);
    Ok(pair)
}

/// Parseval frame of length `d + 1` for Z_2^d with exactly `m` odd vectors,
/// for `1 <= m < d` and `m = d (mod 2)`. Contains no zero vectors.
///
/// Odd `d`, `m = 1`: `{1 + e_1, ..., 1 + e_d, 1}`.
/// Odd `d`, `m >= 3`: the frame for `(d - 2, m - 2)` with two zero coordinates
/// appended, plus `e_{d-1}` and `e_d`.
/// Even `d`: the frame for `(d - 1, m - 1)` with one zero coordinate appended,
/// plus `e_d`.
pub fn low_weight_parseval(dim: usize, m: usize) -> Vec<Gf2Vector> {
    assert!(m >= 1 && m < dim && m % 2 == dim % 2, "no low-weight family for d = {dim}, m = {m}");
    if dim % 2 == 1 {
        if m == 1 {
            let ones = Gf2Vector::all_ones(dim);
            let mut out: Vec<Gf2Vector> = (0..dim).map(|i| &ones + &e(dim, i)).collect();
            out.push(ones);
            out
        } else {
            let mut out: Vec<Gf2Vector> = low_weight_parseval(dim - 2, m - 2)
                .iter()
                .map(|v| v.extend_zeros(2))
                .collect();
            out.push(e(dim, dim - 2));
            out.push(e(dim, dim - 1));
            out
        }
    } else {
        let mut out: Vec<Gf2Vector> = low_weight_parseval(dim - 1, m - 1)
            .iter()
            .map(|v| v.extend_zeros(1))
            .collect();
        out.push(e(dim, dim - 1));
        out
    }
}

/// A Parseval frame with `(f_i, f_i) = alpha[i]` for nonzero `alpha`.
pub fn parseval_with_self_alpha(dim: usize, alpha: &AlphaVector) -> Result<Frame> {
    let k = alpha.len();
    if dim == 0 {
        return Err(Error::InvalidShape { dim, len: k });
    }
    if k < dim {
        return Err(Error::InsufficientLength { dim, len: k });
    }
    if alpha.is_zero() {
        return Err(Error::ZeroAlpha);
    }
    check_parity(dim, alpha)?;
    if k == dim && !alpha.is_all_ones() {
        return Err(Error::BasisForced { dim });
    }
    let m = alpha.weight();
    let mut vectors = if m >= dim {
        canonical_pair(dim, k, m, true).0
    } else {
        low_weight_parseval(dim, m)
    };
    vectors.resize(k, Gf2Vector::zeros(dim));
    let canonical = Frame::new(dim, vectors).expect("canonical vectors have length d");
    let perm = matching_permutation(&canonical.self_diag(), alpha);
    let frame = canonical.permute(&perm).expect("valid permutation");
    assert!(frame.is_parseval(), "constructed frame is not Parseval");
    assert_eq!(&frame.self_diag(), alpha, "constructed frame misses alpha");
    Ok(frame)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::Gf2Matrix;

    fn a(s: &str) -> AlphaVector {
        AlphaVector::from_str_lit(s)
    }

    fn cols(d: usize, cols: &[&str]) -> Frame {
        Frame::new(d, cols.iter().map(|c| Gf2Vector::parse_bits(c).unwrap()).collect()).unwrap()
    }

    #[test]
    fn exact_weight_pair() {
        let pair = dual_pair_with_alpha(&DualAlphaRequest::new(2, a("110"))).unwrap();
        assert_eq!(pair.primal, cols(2, &["10", "01", "00"]));
        assert_eq!(pair.dual, cols(2, &["10", "01", "00"]));
    }

    #[test]
    fn surplus_weight_pair() {
        let pair = dual_pair_with_alpha(&DualAlphaRequest::new(2, a("1111"))).unwrap();
        assert_eq!(pair.primal, cols(2, &["10", "01", "10", "10"]));
        assert_eq!(pair.dual, cols(2, &["10", "01", "10", "10"]));
    }

    #[test]
    fn deficit_weight_pair() {
        let pair = dual_pair_with_alpha(&DualAlphaRequest::new(2, a("000"))).unwrap();
        assert_eq!(pair.primal.vector(2), &Gf2Vector::parse_bits("11").unwrap());
        assert!(pair.cross_diag().is_zero());
    }

    #[test]
    fn pair_errors() {
        assert_eq!(
            dual_pair_with_alpha(&DualAlphaRequest::new(3, a("1010"))),
            Err(Error::ParityMismatch { weight: 2, dim: 3 })
        );
        assert_eq!(
            dual_pair_with_alpha(&DualAlphaRequest::new(3, a("100"))),
            Err(Error::BasisForced { dim: 3 })
        );
        assert!(matches!(
            dual_pair_with_alpha(&DualAlphaRequest::new(3, a("11"))),
            Err(Error::InvalidShape { .. })
        ));
        let basis = dual_pair_with_alpha(&DualAlphaRequest::new(3, a("111"))).unwrap();
        assert_eq!(basis.primal, Frame::standard_basis(3));
    }

    #[test]
    fn parseval_dual_examples() {
        let p = parseval_with_dual_alpha(&DualAlphaRequest::new(2, a("1100"))).unwrap();
        assert_eq!(p.primal, cols(2, &["10", "01", "00", "00"]));
        assert_eq!(p.dual, p.primal);
        let p = parseval_with_dual_alpha(&DualAlphaRequest::new(3, a("11100"))).unwrap();
        assert!(p.primal.is_parseval());
        let p = parseval_with_dual_alpha(&DualAlphaRequest::new(2, a("1111"))).unwrap();
        assert!(p.primal.is_parseval());
        let p = parseval_with_dual_alpha(&DualAlphaRequest::new(2, a("0000"))).unwrap();
        assert!(p.primal.is_parseval());
        assert!(p.cross_diag().is_zero());
    }

    #[test]
    fn parseval_dual_at_length_d_plus_one() {
        let p = parseval_with_dual_alpha(&DualAlphaRequest::new(3, a("0100"))).unwrap();
        assert!(p.primal.is_parseval());
        assert_eq!(
            parseval_with_dual_alpha(&DualAlphaRequest::new(2, a("000"))),
            Err(Error::ParsevalDualUnattainable { len: 3 })
        );
    }

    /// Exhaustive check behind the `K = d + 1`, `alpha = 0` refusal for d = 2
    /// and d = 4: no Parseval frame of that length has such a dual.
    #[test]
    fn parseval_zero_alpha_is_impossible_at_d_plus_one() {
        for d in [2usize, 4] {
            let k = d + 1;
            for word in 0..1u64 << (d * k) {
                let f = Frame::new(
                    d,
                    (0..k)
                        .map(|i| Gf2Vector::from_word(d, (word >> (d * i)) & ((1 << d) - 1)))
                        .collect(),
                )
                .unwrap();
                if !f.is_parseval() {
                    continue;
                }
                let space = f.dual_space().unwrap();
                for h in space.enumerate(false).unwrap() {
                    assert!(!f.cross_gram_diag(&h).unwrap().is_zero(), "{f:?} / {h:?}");
                }
            }
        }
    }

    #[test]
    fn self_alpha_examples() {
        let f = parseval_with_self_alpha(3, &a("0001")).unwrap();
        assert_eq!(f, cols(3, &["011", "101", "110", "111"]));

        let f = parseval_with_self_alpha(4, &a("10001")).unwrap();
        let mut got: Vec<String> = f.vectors().iter().map(|v| v.to_bit_string()).collect();
        got.sort();
        let mut want = vec!["0110", "1010", "1100", "1110", "0001"];
        want.sort();
        assert_eq!(got, want);

        assert_eq!(
            parseval_with_self_alpha(3, &a("111")).unwrap(),
            Frame::standard_basis(3)
        );

        let f = parseval_with_self_alpha(5, &a("100000")).unwrap();
        assert!(f.is_parseval());
        let ones = Gf2Vector::all_ones(5);
        assert_eq!(f.vector(0), &ones);
        for i in 1..6 {
            assert_eq!((f.vector(i) + &ones).weight(), 1);
        }
    }

    #[test]
    fn self_alpha_errors() {
        assert_eq!(parseval_with_self_alpha(3, &a("0000")), Err(Error::ZeroAlpha));
        assert_eq!(
            parseval_with_self_alpha(3, &a("1100")),
            Err(Error::ParityMismatch { weight: 2, dim: 3 })
        );
        assert_eq!(
            parseval_with_self_alpha(3, &a("100")),
            Err(Error::BasisForced { dim: 3 })
        );
        assert_eq!(
            parseval_with_self_alpha(3, &a("11")),
            Err(Error::InsufficientLength { dim: 3, len: 2 })
        );
    }

    #[test]
    fn low_weight_family_is_parseval_and_never_all_even() {
        for d in 3..=9 {
            for m in (1..d).filter(|m| m % 2 == d % 2) {
                let vs = low_weight_parseval(d, m);
                assert_eq!(vs.len(), d + 1);
                let f = Frame::new(d, vs).unwrap();
                assert!(f.is_parseval(), "d={d} m={m}");
                assert_eq!(f.odd_count(), m);
                assert!(f.vectors().iter().all(|v| !v.is_zero()));
                let theta = f.synthesis();
                assert_eq!(&theta * &theta.transpose(), Gf2Matrix::identity(d));
            }
        }
    }

    #[test]
    fn permuted_requests_round_trip() {
        let req = DualAlphaRequest::new(3, a("010110"));
        let pair = dual_pair_with_alpha(&req).unwrap();
        let perm = [5, 3, 1, 0, 2, 4];
        let moved = pair.permute(&perm).unwrap();
        assert!(moved.primal.is_dual(&moved.dual).unwrap());
        for (j, &p) in perm.iter().enumerate() {
            assert_eq!(moved.cross_diag().get(j), req.alpha.get(p));
        }
    }
}
