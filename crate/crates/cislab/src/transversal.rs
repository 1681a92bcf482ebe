//! Exact combinatorics of one-transversal sets.
//!
//! A finite union of rational intervals whose integer translates tile the line
//! determines a piecewise-constant quasi-periodic symbol. This module validates
//! such sets, extracts the integer translation data of each piece, and turns
//! the closed-form floor sums for the symbol's winding number into the exact
//! region of admissible shifts.

use std::collections::BTreeSet;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::interval::IntervalQ;
use crate::rational::{distance_to_odd_over, floor_plus_half, lcm_nonzero, Rat};

/// Validated one-transversal set: disjoint rational intervals of total length
/// one whose fractional-part images tile [0, 1). Pieces are kept sorted by the
/// start of their image, so piece `k` maps onto `[breakpoints[k], breakpoints[k+1])`.
#[derive(Clone, Debug, PartialEq)]
pub struct TransversalSet {
    pieces: Vec<IntervalQ>,
    breakpoints: Vec<Rat>,
}

impl TransversalSet {
    pub fn pieces(&self) -> &[IntervalQ] {
        &self.pieces
    }

    /// Image breakpoints 0 = a_1 < a_2 < ... < a_{L+1} = 1.
    pub fn breakpoints(&self) -> &[Rat] {
        &self.breakpoints
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }
}

/// One mod-1 fragment of a piece: `[start, end) ⊆ [0, 1]` shifted back by `shift`.
struct Fragment {
    start: Rat,
    end: Rat,
    piece: usize,
}

/// Checks that the fractional-part images of `pieces` tile [0, 1) exactly and
/// that each piece maps onto a single interval. Returns the set with pieces
/// sorted by image start.
pub fn validate_transversal(pieces: Vec<IntervalQ>) -> Result<TransversalSet> {
    if pieces.is_empty() {
        return Err(Error::InvalidArgument("no intervals given".into()));
    }
    let total: Rat = pieces.iter().fold(Rat::zero(), |acc, p| acc + p.length());
    if total != Rat::one() {
        return Err(Error::Length {
            total: total.to_string(),
        });
    }

    let mut fragments: Vec<Fragment> = Vec::new();
    for (idx, p) in pieces.iter().enumerate() {
        let mut n = p.lo.floor_i64();
        while Rat::from_int(n) < p.hi {
            let lo = Rat::max(p.lo.clone(), Rat::from_int(n));
            let hi = Rat::min(p.hi.clone(), Rat::from_int(n + 1));
            if lo < hi {
                fragments.push(Fragment {
                    start: &lo - &Rat::from_int(n),
                    end: &hi - &Rat::from_int(n),
                    piece: idx,
                });
            }
            n += 1;
        }
    }

    fragments.sort_by(|a, b| a.start.cmp(&b.start));
    let mut cursor = Rat::zero();
    for f in &fragments {
        if f.start > cursor {
            return Err(Error::Gap {
                lo: cursor.to_string(),
                hi: f.start.to_string(),
            });
        }
        if f.start < cursor {
            return Err(Error::Overlap {
                lo: f.start.to_string(),
                hi: Rat::min(cursor.clone(), f.end.clone()).to_string(),
            });
        }
        cursor = f.end.clone();
    }
    if cursor != Rat::one() {
        return Err(Error::Gap {
            lo: cursor.to_string(),
            hi: "1".into(),
        });
    }

    // Each piece must map onto one interval mod 1. A piece may wrap across an
    // integer only when its two fragments meet, which forces the full circle.
    let mut image_start: Vec<Option<Rat>> = vec![None; pieces.len()];
    for (idx, p) in pieces.iter().enumerate() {
        let mut frs: Vec<(&Rat, &Rat)> = fragments
            .iter()
            .filter(|f| f.piece == idx)
            .map(|f| (&f.start, &f.end))
            .collect();
        frs.sort();
        match frs.len() {
            1 => image_start[idx] = Some(frs[0].0.clone()),
            2 => {
                let wraps = frs[0].0.is_zero() && *frs[1].1 == Rat::one() && frs[0].1 == frs[1].0;
                if !wraps {
                    return Err(Error::NonContiguousImage {
                        lo: p.lo.to_string(),
                        hi: p.hi.to_string(),
                    });
                }
                image_start[idx] = Some(Rat::zero());
            }
            _ => unreachable!("piece of length <= 1 has at most two fragments"),
        }
    }

    let mut order: Vec<usize> = (0..pieces.len()).collect();
    order.sort_by(|&a, &b| image_start[a].cmp(&image_start[b]));
    let sorted: Vec<IntervalQ> = order.iter().map(|&i| pieces[i].clone()).collect();

    let mut breakpoints: Vec<Rat> = order
        .iter()
        .map(|&i| image_start[i].clone().unwrap())
        .collect();
    breakpoints.push(Rat::one());
    debug_assert_eq!(breakpoints[0], Rat::zero());

    Ok(TransversalSet {
        pieces: sorted,
        breakpoints,
    })
}

/// Integer translation data of a validated set: for each piece the integers
/// that carry it into [0, 1], the split points where the symbol's jumps sit,
/// the cell modulus `nu`, and the excluded-shift families.
#[derive(Clone, Debug, PartialEq)]
pub struct CongruenceData {
    /// Number of pieces L.
    pub l: usize,
    /// Image breakpoints, length L + 1.
    pub breakpoints: Vec<Rat>,
    /// Translation integers per piece, ascending; length 1 or 2 each.
    pub lambda: Vec<Vec<i64>>,
    /// Multiplicities (1 or 2).
    pub mu: Vec<usize>,
    /// 0-based indices of pieces with two translations.
    pub omega: Vec<usize>,
    /// Number of two-translation pieces.
    pub rho: usize,
    /// lcm of the nonzero translation differences (1 when all vanish).
    pub nu: i64,
    /// Wrap-around translation: lambda of the last piece plus one.
    pub lambda01: i64,
    /// Split points s_k with 1 - a_{k+1} <= s_k <= 1 - a_k.
    pub split_points: Vec<Rat>,
    /// Distinct positive denominators d of the excluded families odd/(2d).
    pub g_denominators: Vec<i64>,
}

impl CongruenceData {
    pub fn lambda_first(&self, k: usize) -> i64 {
        self.lambda[k][0]
    }

    pub fn lambda_last(&self, k: usize) -> i64 {
        *self.lambda[k].last().unwrap()
    }

    /// The translation preceding piece k in the traversal order, with the
    /// wrap-around convention at k = 0.
    pub fn lambda_prev(&self, k: usize) -> i64 {
        if k == 0 {
            self.lambda01
        } else {
            self.lambda[k - 1][0]
        }
    }

    /// Exact membership in the excluded set G (odd multiples of 1/(2d)).
    pub fn in_excluded_set(&self, alpha: &Rat) -> bool {
        use num_integer::Integer;
        self.g_denominators.iter().any(|&d| {
            let y = alpha * &Rat::from_int(2 * d);
            y.is_integer() && y.numer().is_odd()
        })
    }

    /// Distance from a floating shift to the nearest excluded point.
    pub fn distance_to_excluded(&self, alpha: f64) -> f64 {
        self.g_denominators
            .iter()
            .map(|&d| distance_to_odd_over(alpha, d))
            .fold(f64::INFINITY, f64::min)
    }

    /// Half-width of the scan range: the index vanishes outside |alpha| <= (L + rho)/2.
    pub fn alpha_bound(&self) -> Rat {
        Rat::new((self.l + self.rho) as i64, 2)
    }
}

/// Extracts the congruence data of a validated set.
pub fn congruence_decompose(set: &TransversalSet) -> CongruenceData {
    let l = set.len();
    let mut lambda: Vec<Vec<i64>> = Vec::with_capacity(l);
    for p in set.pieces() {
        // integers with |(n - piece) ∩ [0,1]| > 0, i.e. lo < n < hi + 1
        let mut ns = Vec::new();
        let mut n = p.lo.floor_i64();
        let upper = &p.hi + &Rat::one();
        while Rat::from_int(n) < upper {
            if Rat::from_int(n) > p.lo && Rat::from_int(n) < upper {
                ns.push(n);
            }
            n += 1;
        }
        debug_assert!((1..=2).contains(&ns.len()));
        if ns.len() == 2 {
            debug_assert_eq!(ns[1], ns[0] + 1);
        }
        lambda.push(ns);
    }

    let mu: Vec<usize> = lambda.iter().map(Vec::len).collect();
    let omega: Vec<usize> = (0..l).filter(|&k| mu[k] == 2).collect();
    let rho = omega.len();
    let lambda01 = lambda[l - 1][0] + 1;

    let mut diffs: Vec<i64> = Vec::new();
    for k in 0..l {
        let first = lambda[k][0];
        let last = *lambda[k].last().unwrap();
        let prev = if k == 0 { lambda01 } else { lambda[k - 1][0] };
        diffs.push(last - first);
        diffs.push(prev - last);
    }
    let nu = lcm_nonzero(&diffs);
    let mut g_denominators: Vec<i64> = diffs
        .iter()
        .filter(|&&d| d != 0)
        .map(|&d| d.abs())
        .collect();
    g_denominators.sort_unstable();
    g_denominators.dedup();

    let breakpoints = set.breakpoints().to_vec();
    let mut split_points = Vec::with_capacity(l);
    for (k, p) in set.pieces().iter().enumerate() {
        let s = if mu[k] == 2 {
            // upper endpoint of (lambda_first - piece) ∩ [0, 1]
            Rat::min(&Rat::from_int(lambda[k][0]) - &p.lo, Rat::one())
        } else {
            &Rat::one() - &breakpoints[k]
        };
        debug_assert!(s >= &Rat::one() - &breakpoints[k + 1]);
        debug_assert!(s <= &Rat::one() - &breakpoints[k]);
        split_points.push(s);
    }

    CongruenceData {
        l,
        breakpoints,
        lambda,
        mu,
        omega,
        rho,
        nu,
        lambda01,
        split_points,
        g_denominators,
    }
}

/// A shift parameter, either exact or floating. Floating values are snapped to
/// a rational with denominator at most 10^6 before any exact test.
#[derive(Clone, Debug)]
pub enum Alpha {
    Exact(Rat),
    Float(f64),
}

impl From<Rat> for Alpha {
    fn from(r: Rat) -> Self {
        Alpha::Exact(r)
    }
}

impl From<f64> for Alpha {
    fn from(x: f64) -> Self {
        Alpha::Float(x)
    }
}

const FLOAT_EXCLUSION_TOLERANCE: f64 = 1e-9;
const SNAP_MAX_DENOMINATOR: u64 = 1_000_000;

fn resolve_alpha(cd: &CongruenceData, alpha: Alpha) -> Result<Rat> {
    match alpha {
        Alpha::Exact(a) => {
            if cd.in_excluded_set(&a) {
                Err(Error::ExcludedAlpha {
                    alpha: a.to_string(),
                })
            } else {
                Ok(a)
            }
        }
        Alpha::Float(x) => {
            if cd.distance_to_excluded(x) <= FLOAT_EXCLUSION_TOLERANCE {
                return Err(Error::ExcludedAlpha {
                    alpha: x.to_string(),
                });
            }
            let snapped = Rat::approximate(x, SNAP_MAX_DENOMINATOR);
            if cd.in_excluded_set(&snapped) {
                return Err(Error::ExcludedAlpha {
                    alpha: x.to_string(),
                });
            }
            Ok(snapped)
        }
    }
}

/// Winding number of the symbol curve at shift `alpha`, by the closed-form
/// floor sum over the translation differences.
pub fn index_formula(cd: &CongruenceData, alpha: impl Into<Alpha>) -> Result<i64> {
    let a = resolve_alpha(cd, alpha.into())?;
    let mut sum = 0i64;
    for k in 0..cd.l {
        let jump = cd.lambda_last(k) - cd.lambda_first(k);
        let back = cd.lambda_prev(k) - cd.lambda_last(k);
        sum += floor_plus_half(&(&a * &Rat::from_int(jump)));
        sum += floor_plus_half(&(&a * &Rat::from_int(back)));
    }
    Ok(-sum)
}

/// The cell-counting function: the winding number as a function of the cell
/// label n, with `alpha` anywhere in [(n-1)/(2 nu), n/(2 nu)).
pub fn f_of_n(cd: &CongruenceData, n: i64) -> Result<i64> {
    let two_nu = Rat::from_int(2 * cd.nu);
    let mut value = -(cd.rho as i64) * floor_plus_half(&(&Rat::from_int(n - 1) / &two_nu));
    for k in 0..cd.l {
        let diff = cd.lambda_prev(k) - cd.lambda_first(k);
        let coefficient = if cd.mu[k] == 2 { diff - 1 } else { diff };
        if coefficient == 0 {
            continue;
        }
        let g = match diff.signum() {
            1 => 1,
            -1 => 0,
            _ => return Err(Error::UndefinedDirection { k }),
        };
        let arg = &(&Rat::from_int(n - g) * &Rat::from_int(coefficient)) / &two_nu;
        value -= floor_plus_half(&arg);
    }
    Ok(value)
}

/// Admissible-shift region: merged half-open cells annotated with the winding
/// index on each, plus the excluded points lying inside the index-zero cells.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaRegion {
    /// Maximal runs of cells with constant index, ascending and disjoint.
    pub cells: Vec<(IntervalQ, i64)>,
    /// Excluded points contained in the index-zero cells.
    pub excluded_points: Vec<Rat>,
    /// Cell labels n with vanishing index.
    pub zero_cell_labels: Vec<i64>,
}

impl AlphaRegion {
    /// True when `alpha` is admissible: inside an index-zero cell and not excluded.
    pub fn contains(&self, alpha: &Rat) -> bool {
        if self.excluded_points.contains(alpha) {
            return false;
        }
        self.cells
            .iter()
            .any(|(cell, index)| *index == 0 && *alpha >= cell.lo && *alpha < cell.hi)
    }

    /// The admissible set as maximal intervals: index-zero cells split at the
    /// excluded points, with open endpoints where a point was removed.
    pub fn admissible_intervals(&self) -> Vec<IntervalQ> {
        let mut out = Vec::new();
        for (cell, index) in &self.cells {
            if *index != 0 {
                continue;
            }
            let mut cuts: Vec<&Rat> = self
                .excluded_points
                .iter()
                .filter(|p| **p >= cell.lo && **p < cell.hi)
                .collect();
            cuts.sort();
            let mut lo = cell.lo.clone();
            let mut lo_closed = true;
            for p in cuts {
                if *p > lo {
                    out.push(
                        IntervalQ::with_flags(lo.clone(), p.clone(), lo_closed, false).unwrap(),
                    );
                }
                lo = p.clone();
                lo_closed = false;
            }
            if lo < cell.hi {
                out.push(IntervalQ::with_flags(lo, cell.hi.clone(), lo_closed, false).unwrap());
            }
        }
        out
    }
}

impl Serialize for AlphaRegion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Cell<'a> {
            lo: &'a Rat,
            hi: &'a Rat,
            index: i64,
        }
        let cells: Vec<Cell> = self
            .cells
            .iter()
            .map(|(iv, index)| Cell {
                lo: &iv.lo,
                hi: &iv.hi,
                index: *index,
            })
            .collect();
        let mut s = serializer.serialize_struct("AlphaRegion", 4)?;
        s.serialize_field("cells", &cells)?;
        s.serialize_field("excluded", &self.excluded_points)?;
        s.serialize_field("admissible", &self.admissible_intervals())?;
        s.serialize_field("a_set", &self.zero_cell_labels)?;
        s.end()
    }
}

/// Scans all cells with |alpha| <= (L + rho)/2 and assembles the region.
pub fn admissible_region(cd: &CongruenceData) -> Result<AlphaRegion> {
    let half_cells = 2 * cd.nu * ((cd.l + cd.rho) as i64 + 1) / 2;
    let two_nu = Rat::from_int(2 * cd.nu);
    let bound = cd.alpha_bound();

    let mut labeled: Vec<(i64, i64)> = Vec::new();
    for n in -half_cells..=half_cells {
        labeled.push((n, f_of_n(cd, n)?));
    }
    let zero_cell_labels: Vec<i64> = labeled
        .iter()
        .filter(|(_, f)| *f == 0)
        .map(|(n, _)| *n)
        .collect();

    let mut cells: Vec<(IntervalQ, i64)> = Vec::new();
    let mut run_start = 0usize;
    for i in 1..=labeled.len() {
        if i == labeled.len() || labeled[i].1 != labeled[run_start].1 {
            let (n0, f) = labeled[run_start];
            let n1 = labeled[i - 1].0;
            let lo = &Rat::from_int(n0 - 1) / &two_nu;
            let hi = &Rat::from_int(n1) / &two_nu;
            debug_assert!(
                f != 0 || (lo >= -&bound && hi <= bound),
                "zero-index cell escapes the a priori bound"
            );
            cells.push((IntervalQ::new(lo, hi).unwrap(), f));
            run_start = i;
        }
    }

    let mut excluded: BTreeSet<Rat> = BTreeSet::new();
    for (cell, index) in &cells {
        if *index != 0 {
            continue;
        }
        for &d in &cd.g_denominators {
            let two_d = Rat::from_int(2 * d);
            // smallest odd o with o/(2d) >= lo
            let mut o = (&cell.lo * &two_d).floor_i64();
            if o % 2 == 0 {
                o += 1;
            } else if Rat::new(o, 2 * d) < cell.lo {
                o += 2;
            }
            while Rat::new(o, 2 * d) < cell.hi {
                excluded.insert(Rat::new(o, 2 * d));
                o += 2;
            }
        }
    }

    Ok(AlphaRegion {
        cells,
        excluded_points: excluded.into_iter().collect(),
        zero_cell_labels,
    })
}

/// Worked one-transversal sets used throughout the tests and examples.
pub mod sets {
    use super::{validate_transversal, TransversalSet};
    use crate::interval::{ivq, IntervalQ};
    use crate::rational::rat;

    /// The symmetric unit interval [-1/2, 1/2); its inverse transform is sinc.
    pub fn sinc() -> TransversalSet {
        validate_transversal(vec![ivq("-1/2", "1/2")]).unwrap()
    }

    /// Littlewood-Paley band [-1, -1/2) ∪ (1/2, 1].
    pub fn littlewood_paley() -> TransversalSet {
        validate_transversal(vec![
            ivq("-1", "-1/2"),
            IntervalQ::with_flags(rat("1/2"), rat("1"), false, true).unwrap(),
        ])
        .unwrap()
    }

    /// The Journe wavelet set, four pieces with denominator 7.
    pub fn journe() -> TransversalSet {
        validate_transversal(vec![
            ivq("2", "16/7"),
            ivq("2/7", "1/2"),
            ivq("-1/2", "-2/7"),
            ivq("-16/7", "-2"),
        ])
        .unwrap()
    }

    /// A non-symmetric five-piece set mixing denominators 2, 3 and 5.
    pub fn asymmetric_five_piece() -> TransversalSet {
        validate_transversal(vec![
            ivq("3", "16/5"),
            ivq("1/5", "1/3"),
            ivq("4/3", "3/2"),
            ivq("-1/2", "-1/3"),
            ivq("-4/3", "-1"),
        ])
        .unwrap()
    }

    pub fn all() -> Vec<(&'static str, TransversalSet)> {
        vec![
            ("sinc", sinc()),
            ("littlewood-paley", littlewood_paley()),
            ("journe", journe()),
            ("asymmetric-five-piece", asymmetric_five_piece()),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::ivq;
    use crate::rational::rat;

    #[test]
    fn accepts_fundamental_domain() {
        let set = validate_transversal(vec![ivq("0", "1")]).unwrap();
        assert_eq!(set.breakpoints(), &[rat("0"), rat("1")]);
    }

    #[test]
    fn accepts_wrapping_symmetric_interval() {
        let set = sets::sinc();
        assert_eq!(set.breakpoints(), &[rat("0"), rat("1")]);
    }

    #[test]
    fn journe_breakpoints_sorted_by_image() {
        let set = sets::journe();
        assert_eq!(
            set.breakpoints(),
            &[rat("0"), rat("2/7"), rat("1/2"), rat("5/7"), rat("1")]
        );
        assert_eq!(set.pieces()[0], ivq("2", "16/7"));
        assert_eq!(set.pieces()[3], ivq("-16/7", "-2"));
    }

    #[test]
    fn rejects_wrong_length() {
        let err = validate_transversal(vec![ivq("0", "3/4")]).unwrap_err();
        assert!(matches!(err, Error::Length { .. }));
    }

    #[test]
    fn rejects_overlap() {
        let err = validate_transversal(vec![ivq("0", "1/2"), ivq("1/4", "3/4")]).unwrap_err();
        assert!(matches!(err, Error::Overlap { .. }));
    }

    #[test]
    fn rejects_gap() {
        let err = validate_transversal(vec![ivq("0", "1/4"), ivq("1/2", "1"), ivq("5/2", "11/4")])
            .unwrap_err();
        assert!(matches!(err, Error::Gap { .. }));
    }

    #[test]
    fn rejects_split_image() {
        // [-1/4, 1/2) maps onto [0, 1/2) ∪ [3/4, 1): two arcs, not an interval
        let err = validate_transversal(vec![ivq("-1/4", "1/2"), ivq("1/2", "3/4")]).unwrap_err();
        assert!(matches!(err, Error::NonContiguousImage { .. }));
    }

    #[test]
    fn sinc_congruence_data() {
        let cd = congruence_decompose(&sets::sinc());
        assert_eq!(cd.l, 1);
        assert_eq!(cd.lambda, vec![vec![0, 1]]);
        assert_eq!(cd.rho, 1);
        assert_eq!(cd.nu, 1);
        assert_eq!(cd.lambda01, 1);
        assert_eq!(cd.split_points, vec![rat("1/2")]);
        assert_eq!(cd.g_denominators, vec![1]);
    }

    #[test]
    fn littlewood_paley_congruence_data() {
        let cd = congruence_decompose(&sets::littlewood_paley());
        assert_eq!(cd.l, 2);
        assert_eq!(cd.lambda, vec![vec![0], vec![1]]);
        assert_eq!(cd.lambda01, 2);
        assert_eq!(cd.rho, 0);
        assert_eq!(cd.nu, 2);
        assert_eq!(cd.g_denominators, vec![1, 2]);
    }

    #[test]
    fn journe_congruence_data() {
        let cd = congruence_decompose(&sets::journe());
        assert_eq!(cd.l, 4);
        assert_eq!(cd.lambda, vec![vec![3], vec![1], vec![0], vec![-2]]);
        assert_eq!(cd.lambda01, -1);
        assert_eq!(cd.rho, 0);
        assert_eq!(cd.nu, 4);
        assert_eq!(cd.g_denominators, vec![1, 2, 4]);
    }

    #[test]
    fn five_piece_congruence_data() {
        let cd = congruence_decompose(&sets::asymmetric_five_piece());
        assert_eq!(cd.l, 5);
        assert_eq!(
            cd.lambda,
            vec![vec![4], vec![1], vec![2], vec![0], vec![-1]]
        );
        assert_eq!(cd.lambda01, 0);
        assert_eq!(cd.nu, 12);
        assert_eq!(cd.g_denominators, vec![1, 2, 3, 4]);
    }

    #[test]
    fn index_formula_examples() {
        let journe = congruence_decompose(&sets::journe());
        assert_eq!(index_formula(&journe, rat("0")).unwrap(), 0);
        assert_eq!(index_formula(&journe, rat("3/10")).unwrap(), -1);
        assert_eq!(index_formula(&journe, rat("1/5")).unwrap(), 1);
        let lp = congruence_decompose(&sets::littlewood_paley());
        assert_eq!(index_formula(&lp, rat("3/5")).unwrap(), 0);
        assert_eq!(index_formula(&lp, rat("0")).unwrap(), 0);
    }

    #[test]
    fn quarter_shift_is_excluded_for_journe() {
        // the back-jumps with translation difference 2 put odd multiples of
        // 1/4 into the excluded family, so the curve passes through zero there
        let journe = congruence_decompose(&sets::journe());
        assert!(journe.in_excluded_set(&rat("1/4")));
        assert!(matches!(
            index_formula(&journe, rat("1/4")),
            Err(Error::ExcludedAlpha { .. })
        ));
    }

    #[test]
    fn index_formula_rejects_excluded_points() {
        let cd = congruence_decompose(&sets::sinc());
        assert!(matches!(
            index_formula(&cd, rat("1/2")),
            Err(Error::ExcludedAlpha { .. })
        ));
        assert!(matches!(
            index_formula(&cd, 0.5),
            Err(Error::ExcludedAlpha { .. })
        ));
        assert_eq!(index_formula(&cd, 0.3).unwrap(), 0);
    }

    #[test]
    fn f_values_match_hand_computation() {
        let journe = congruence_decompose(&sets::journe());
        assert_eq!(f_of_n(&journe, 0).unwrap(), 0);
        assert_eq!(f_of_n(&journe, 2).unwrap(), 1);
        let lp = congruence_decompose(&sets::littlewood_paley());
        assert_eq!(f_of_n(&lp, 1).unwrap(), 0);
    }

    #[test]
    fn undefined_direction_is_surfaced() {
        // synthetic data: a two-translation piece whose preceding translation
        // equals its first one, so the direction of the shifted floor is ambiguous
        let cd = CongruenceData {
            l: 2,
            breakpoints: vec![rat("0"), rat("1/2"), rat("1")],
            lambda: vec![vec![0, 1], vec![0]],
            mu: vec![2, 1],
            omega: vec![0],
            rho: 1,
            nu: 1,
            lambda01: 0,
            split_points: vec![rat("1/2"), rat("1/2")],
            g_denominators: vec![1],
        };
        assert!(matches!(
            f_of_n(&cd, 3),
            Err(Error::UndefinedDirection { k: 0 })
        ));
        // the index formula itself stays available
        assert!(index_formula(&cd, rat("1/5")).is_ok());
    }

    #[test]
    fn zero_cells_match_known_sets() {
        let lp = congruence_decompose(&sets::littlewood_paley());
        let region = admissible_region(&lp).unwrap();
        assert_eq!(region.zero_cell_labels, vec![-2, 0, 1, 3]);

        let journe = congruence_decompose(&sets::journe());
        let region = admissible_region(&journe).unwrap();
        assert_eq!(region.zero_cell_labels, vec![-9, -5, -3, 0, 1, 4, 6, 10]);
    }

    #[test]
    fn sinc_admissible_region_is_open_symmetric_interval() {
        let cd = congruence_decompose(&sets::sinc());
        let region = admissible_region(&cd).unwrap();
        let adm = region.admissible_intervals();
        assert_eq!(adm.len(), 1);
        assert_eq!(adm[0].lo, rat("-1/2"));
        assert_eq!(adm[0].hi, rat("1/2"));
        assert!(!adm[0].lo_closed && !adm[0].hi_closed);
        assert!(region.contains(&rat("0")));
        assert!(region.contains(&rat("49/100")));
        assert!(!region.contains(&rat("-1/2")));
        assert!(!region.contains(&rat("1/2")));
    }

    #[test]
    fn littlewood_paley_admissible_region() {
        let cd = congruence_decompose(&sets::littlewood_paley());
        let region = admissible_region(&cd).unwrap();
        let adm = region.admissible_intervals();
        let got: Vec<(String, String)> = adm
            .iter()
            .map(|iv| (iv.lo.to_string(), iv.hi.to_string()))
            .collect();
        assert_eq!(
            got,
            vec![
                ("-3/4".into(), "-1/2".into()),
                ("-1/4".into(), "1/4".into()),
                ("1/2".into(), "3/4".into()),
            ]
        );
        assert!(adm.iter().all(|iv| !iv.lo_closed && !iv.hi_closed));
    }

    #[test]
    fn region_round_trips_through_json() {
        let set = sets::journe();
        let json = serde_json::to_string(&set.pieces().to_vec()).unwrap();
        let parsed: Vec<IntervalQ> = serde_json::from_str(&json).unwrap();
        let reparsed = validate_transversal(parsed).unwrap();
        let before = admissible_region(&congruence_decompose(&set)).unwrap();
        let after = admissible_region(&congruence_decompose(&reparsed)).unwrap();
        assert_eq!(before, after);
    }
}
