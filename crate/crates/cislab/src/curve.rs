//! The symbol curve of a transversal set: circular arcs joined by jump
//! segments, its index in closed form, and a sampled winding oracle.

use std::f64::consts::PI;
use std::io::Write;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::transversal::CongruenceData;

const TAU: f64 = 2.0 * PI;

/// Arc t -> amplitude * e^{2 pi i frequency t} for t in [t_start, t_end].
#[derive(Clone, Debug)]
pub struct ArcPiece {
    pub amplitude: Complex64,
    pub frequency: f64,
    pub t_start: f64,
    pub t_end: f64,
}

impl ArcPiece {
    pub fn at(&self, t: f64) -> Complex64 {
        self.amplitude * Complex64::from_polar(1.0, TAU * self.frequency * t)
    }

    pub fn extent(&self) -> f64 {
        self.t_end - self.t_start
    }
}

/// Chord t -> amplitude * ((1-t) e^{2 pi i M alpha} + t e^{2 pi i N alpha}), t in [0, 1].
#[derive(Clone, Debug)]
pub struct SegmentPiece {
    pub amplitude: Complex64,
    pub m: i64,
    pub n: i64,
    pub alpha: f64,
}

impl SegmentPiece {
    fn endpoints(&self) -> (Complex64, Complex64) {
        (
            self.amplitude * Complex64::from_polar(1.0, TAU * self.m as f64 * self.alpha),
            self.amplitude * Complex64::from_polar(1.0, TAU * self.n as f64 * self.alpha),
        )
    }

    pub fn at(&self, t: f64) -> Complex64 {
        let (a, b) = self.endpoints();
        a * (1.0 - t) + b * t
    }

    pub fn is_degenerate(&self) -> bool {
        self.m == self.n
    }
}

#[derive(Clone, Debug)]
pub enum CurvePiece {
    Arc(ArcPiece),
    Segment(SegmentPiece),
}

impl CurvePiece {
    pub fn start(&self) -> Complex64 {
        match self {
            CurvePiece::Arc(a) => a.at(a.t_start),
            CurvePiece::Segment(s) => s.at(0.0),
        }
    }

    pub fn end(&self) -> Complex64 {
        match self {
            CurvePiece::Arc(a) => a.at(a.t_end),
            CurvePiece::Segment(s) => s.at(1.0),
        }
    }

    fn has_extent(&self) -> bool {
        match self {
            CurvePiece::Arc(a) => a.extent() > 0.0 && a.frequency != 0.0,
            CurvePiece::Segment(s) => !s.is_degenerate(),
        }
    }
}

/// Closed oriented curve assembled from arcs and segments.
#[derive(Clone, Debug)]
pub struct SymbolCurve {
    pub pieces: Vec<CurvePiece>,
}

impl SymbolCurve {
    /// Largest gap between consecutive piece endpoints (and around the loop).
    pub fn closure_defect(&self) -> f64 {
        let mut defect: f64 = 0.0;
        for (i, piece) in self.pieces.iter().enumerate() {
            let next = &self.pieces[(i + 1) % self.pieces.len()];
            defect = defect.max((piece.end() - next.start()).norm());
        }
        defect
    }
}

/// Builds the symbol curve of a congruence-decomposed set at shift `alpha`:
/// for each piece, taken in reverse order, an arc at the first translation,
/// the jump to the second, the arc at the second, and the jump to the next
/// piece's translation. Degenerate pieces are kept with zero extent.
pub fn build_symbol_curve(cd: &CongruenceData, alpha: f64) -> SymbolCurve {
    let unit = |phase: f64| Complex64::from_polar(1.0, TAU * phase);
    let mut pieces = Vec::with_capacity(4 * cd.l);
    for k in (0..cd.l).rev() {
        let a_k = cd.breakpoints[k].to_f64();
        let a_k1 = cd.breakpoints[k + 1].to_f64();
        let s_k = cd.split_points[k].to_f64();
        let first = cd.lambda_first(k);
        let last = cd.lambda_last(k);
        let prev = cd.lambda_prev(k);
        pieces.push(CurvePiece::Arc(ArcPiece {
            amplitude: unit(alpha * first as f64),
            frequency: -alpha,
            t_start: 1.0 - a_k1,
            t_end: s_k,
        }));
        pieces.push(CurvePiece::Segment(SegmentPiece {
            amplitude: unit(-alpha * s_k),
            m: first,
            n: last,
            alpha,
        }));
        pieces.push(CurvePiece::Arc(ArcPiece {
            amplitude: unit(alpha * last as f64),
            frequency: -alpha,
            t_start: s_k,
            t_end: 1.0 - a_k,
        }));
        pieces.push(CurvePiece::Segment(SegmentPiece {
            amplitude: unit(-alpha * (1.0 - a_k)),
            m: last,
            n: prev,
            alpha,
        }));
    }
    SymbolCurve { pieces }
}

/// Index contribution of one piece: (t_end - t_start) * frequency for an arc,
/// and r alpha - floor(r alpha + 1/2) with r = N - M for a segment.
pub fn piece_index(piece: &CurvePiece) -> Result<f64> {
    match piece {
        CurvePiece::Arc(a) => Ok(a.extent() * a.frequency),
        CurvePiece::Segment(s) => {
            let x = (s.n - s.m) as f64 * s.alpha;
            let shifted = x + 0.5;
            // x + 1/2 on an integer means the chord passes through 0
            if (shifted - shifted.round()).abs() < 1e-12 {
                return Err(Error::OriginCrossing);
            }
            Ok(x - shifted.floor())
        }
    }
}

/// Sum of the closed-form piece indices, which must land on an integer.
pub fn curve_index(curve: &SymbolCurve) -> Result<i64> {
    let mut sum = 0.0;
    for piece in &curve.pieces {
        sum += piece_index(piece)?;
    }
    let rounded = sum.round();
    if (sum - rounded).abs() > 1e-6 {
        return Err(Error::NonIntegerIndex { value: sum });
    }
    Ok(rounded as i64)
}

/// Exact minimum modulus over the curve: arcs have constant modulus, and a
/// chord's distance to the origin has a closed form.
pub fn curve_min_modulus(curve: &SymbolCurve) -> f64 {
    let mut min = f64::INFINITY;
    for piece in &curve.pieces {
        let m = match piece {
            CurvePiece::Arc(a) => a.amplitude.norm(),
            CurvePiece::Segment(s) => {
                let (a, b) = s.endpoints();
                segment_distance_to_origin(a, b)
            }
        };
        min = min.min(m);
    }
    min
}

fn segment_distance_to_origin(a: Complex64, b: Complex64) -> f64 {
    let d = b - a;
    let len2 = d.norm_sqr();
    if len2 == 0.0 {
        return a.norm();
    }
    let t = (-(a.re * d.re + a.im * d.im) / len2).clamp(0.0, 1.0);
    (a + d * t).norm()
}

/// Winding number of a closed sample loop around the origin, by accumulating
/// principal-value argument increments.
pub fn winding_from_samples(samples: &[Complex64]) -> Result<i64> {
    let mut total = 0.0;
    let mut min_modulus = f64::INFINITY;
    for z in samples {
        min_modulus = min_modulus.min(z.norm());
    }
    if min_modulus <= 1e-9 {
        return Err(Error::OriginProximity { min_modulus });
    }
    for i in 0..samples.len() {
        let a = samples[i];
        let b = samples[(i + 1) % samples.len()];
        let increment = (b / a).arg();
        if increment.abs() >= PI {
            return Err(Error::Undersampled {
                increment: increment.abs(),
            });
        }
        total += increment;
    }
    let turns = total / TAU;
    let rounded = turns.round();
    if (turns - rounded).abs() > 1e-6 {
        return Err(Error::NonIntegerIndex { value: turns });
    }
    Ok(rounded as i64)
}

/// Samples every piece of the curve uniformly. Zero-extent pieces contribute
/// a single point.
pub fn sample_curve(curve: &SymbolCurve, samples_per_piece: usize) -> Vec<Complex64> {
    let mut samples = Vec::new();
    for piece in &curve.pieces {
        if !piece.has_extent() {
            samples.push(piece.start());
            continue;
        }
        for i in 0..samples_per_piece {
            let t = i as f64 / samples_per_piece as f64;
            let z = match piece {
                CurvePiece::Arc(a) => a.at(a.t_start + t * a.extent()),
                CurvePiece::Segment(s) => s.at(t),
            };
            samples.push(z);
        }
    }
    samples
}

/// Winding number from a dense sampling of the curve.
pub fn numeric_winding(curve: &SymbolCurve, samples_per_piece: usize) -> Result<i64> {
    winding_from_samples(&sample_curve(curve, samples_per_piece))
}

/// Doubles the sampling rate (starting from 256 per piece) until every
/// argument increment is below pi/2.
pub fn numeric_winding_adaptive(curve: &SymbolCurve) -> Result<i64> {
    let mut spp = 256;
    loop {
        let samples = sample_curve(curve, spp);
        let mut max_increment = 0.0f64;
        let mut min_modulus = f64::INFINITY;
        for i in 0..samples.len() {
            let a = samples[i];
            let b = samples[(i + 1) % samples.len()];
            min_modulus = min_modulus.min(a.norm());
            max_increment = max_increment.max((b / a).arg().abs());
        }
        if min_modulus <= 1e-9 {
            return Err(Error::OriginProximity { min_modulus });
        }
        if max_increment < PI / 2.0 || spp >= 1 << 16 {
            return winding_from_samples(&samples);
        }
        spp *= 2;
    }
}

/// Writes `(piece_id, t, re, im)` rows for plotting.
pub fn write_curve_csv<W: Write>(
    curve: &SymbolCurve,
    samples_per_piece: usize,
    out: &mut W,
) -> std::io::Result<()> {
    writeln!(out, "piece_id,t,re,im")?;
    for (id, piece) in curve.pieces.iter().enumerate() {
        for i in 0..=samples_per_piece {
            let t = i as f64 / samples_per_piece as f64;
            let z = match piece {
                CurvePiece::Arc(a) => a.at(a.t_start + t * a.extent()),
                CurvePiece::Segment(s) => s.at(t),
            };
            writeln!(out, "{id},{t},{},{}", z.re, z.im)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transversal::{congruence_decompose, index_formula, sets};

    fn unit_circle() -> SymbolCurve {
        SymbolCurve {
            pieces: vec![CurvePiece::Arc(ArcPiece {
                amplitude: Complex64::new(1.0, 0.0),
                frequency: 1.0,
                t_start: 0.0,
                t_end: 1.0,
            })],
        }
    }

    #[test]
    fn arc_and_segment_indices() {
        let full = piece_index(&CurvePiece::Arc(ArcPiece {
            amplitude: Complex64::new(1.0, 0.0),
            frequency: 1.0,
            t_start: 0.0,
            t_end: 1.0,
        }))
        .unwrap();
        assert_eq!(full, 1.0);

        let seg = |m: i64, n: i64, alpha: f64| {
            piece_index(&CurvePiece::Segment(SegmentPiece {
                amplitude: Complex64::new(1.0, 0.0),
                m,
                n,
                alpha,
            }))
        };
        assert!((seg(0, 1, 0.3).unwrap() - 0.3).abs() < 1e-15);
        assert!((seg(0, 2, 0.3).unwrap() + 0.4).abs() < 1e-15);
        assert!(matches!(seg(0, 1, 0.5), Err(Error::OriginCrossing)));
        // segment indices always land strictly inside (-1/2, 1/2)
        for r in 1..6i64 {
            for i in 0..50 {
                let alpha = -1.7 + 0.07 * i as f64;
                if let Ok(v) = seg(0, r, alpha) {
                    assert!(v > -0.5 && v < 0.5);
                }
            }
        }
    }

    #[test]
    fn curve_shapes_for_worked_sets() {
        let sinc = congruence_decompose(&sets::sinc());
        let curve = build_symbol_curve(&sinc, 0.3);
        assert_eq!(curve.pieces.len(), 4);
        assert!(curve.closure_defect() < 1e-12);

        let journe = congruence_decompose(&sets::journe());
        let curve = build_symbol_curve(&journe, 0.3);
        assert_eq!(curve.pieces.len(), 16);
        assert!(curve.closure_defect() < 1e-12);
    }

    #[test]
    fn degenerate_shift_collapses_to_a_point() {
        let cd = congruence_decompose(&sets::littlewood_paley());
        let curve = build_symbol_curve(&cd, 0.0);
        for piece in &curve.pieces {
            assert!((piece.start() - Complex64::new(1.0, 0.0)).norm() < 1e-15);
            assert!((piece.end() - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        }
        assert_eq!(curve_index(&curve).unwrap(), 0);
        assert_eq!(numeric_winding(&curve, 64).unwrap(), 0);
        assert_eq!(curve_min_modulus(&curve), 1.0);
    }

    #[test]
    fn index_values_match_closed_form() {
        let sinc = congruence_decompose(&sets::sinc());
        assert_eq!(curve_index(&build_symbol_curve(&sinc, 0.3)).unwrap(), 0);
        let journe = congruence_decompose(&sets::journe());
        assert_eq!(curve_index(&build_symbol_curve(&journe, 0.3)).unwrap(), -1);
        // 1/4 sits in the excluded set of the Journe data: the curve touches 0
        let excluded = build_symbol_curve(&journe, 0.25);
        assert!(curve_min_modulus(&excluded) < 1e-12);
        assert!(matches!(curve_index(&excluded), Err(Error::OriginCrossing)));
        let lp = congruence_decompose(&sets::littlewood_paley());
        assert_eq!(curve_index(&build_symbol_curve(&lp, 0.6)).unwrap(), 0);
    }

    #[test]
    fn numeric_oracle_agrees_on_a_spread_of_shifts() {
        for (_, set) in sets::all() {
            let cd = congruence_decompose(&set);
            for i in 0..40 {
                let alpha = -2.3 + 0.117 * i as f64;
                if cd.distance_to_excluded(alpha) < 1e-6 {
                    continue;
                }
                let expected = index_formula(&cd, alpha).unwrap();
                let curve = build_symbol_curve(&cd, alpha);
                assert_eq!(curve_index(&curve).unwrap(), expected);
                assert_eq!(numeric_winding_adaptive(&curve).unwrap(), expected);
            }
        }
    }

    #[test]
    fn min_modulus_closed_forms() {
        let sinc = congruence_decompose(&sets::sinc());
        let m = curve_min_modulus(&build_symbol_curve(&sinc, 0.3));
        assert!((m - (0.3 * PI).cos().abs()) < 1e-14);
        // excluded shifts touch the origin
        let m = curve_min_modulus(&build_symbol_curve(&sinc, 0.5));
        assert!(m < 1e-12);
        let m = curve_min_modulus(&build_symbol_curve(&sinc, 0.0));
        assert!((m - 1.0).abs() < 1e-15);
    }

    #[test]
    fn sampled_winding_oracle_basics() {
        assert_eq!(numeric_winding(&unit_circle(), 128).unwrap(), 1);
        assert!(matches!(
            numeric_winding(&unit_circle(), 2),
            Err(Error::Undersampled { .. })
        ));
        let near_zero = SymbolCurve {
            pieces: vec![CurvePiece::Arc(ArcPiece {
                amplitude: Complex64::new(1e-12, 0.0),
                frequency: 1.0,
                t_start: 0.0,
                t_end: 1.0,
            })],
        };
        assert!(matches!(
            numeric_winding(&near_zero, 128),
            Err(Error::OriginProximity { .. })
        ));
    }

    #[test]
    fn csv_emitter_layout() {
        let cd = congruence_decompose(&sets::sinc());
        let curve = build_symbol_curve(&cd, 0.3);
        let mut buf = Vec::new();
        write_curve_csv(&curve, 4, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("piece_id,t,re,im"));
        assert_eq!(text.lines().count(), 1 + 4 * 5);
        assert!(text.ends_with('\n'));
    }
}
