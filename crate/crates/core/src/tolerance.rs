use serde::Serialize;

pub const RELATIVE: f64 = 1e-9;
pub const ABSOLUTE_FLOOR: f64 = 1e-12;
/// Discrepancies at or below this are never reported as falsifications.
pub const FALSIFICATION: f64 = 1e-6;

/// Comparison band for derived equalities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerance {
    pub relative: f64,
    pub absolute: f64,
    pub falsification: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            relative: RELATIVE,
            absolute: ABSOLUTE_FLOOR,
            falsification: FALSIFICATION,
        }
    }
}

/// How a single sampled identity `lhs = rhs` came out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Agreement {
    Within,
    /// Outside the pass band but too small to call a falsification.
    Marginal,
    Falsified,
}

impl Tolerance {
    pub fn with_relative(relative: f64) -> Self {
        Tolerance {
            relative,
            ..Tolerance::default()
        }
    }

    /// `scale` is the magnitude of the operands the two sides were built
    /// from; it must be at least `max(|lhs|, |rhs|)`.
    pub fn band(&self, scale: f64) -> f64 {
        (self.relative * scale).max(self.absolute)
    }

    pub fn close(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.band(a.abs().max(b.abs()))
    }

    pub fn classify(&self, lhs: f64, rhs: f64, scale: f64) -> Agreement {
        let scale = scale.max(lhs.abs()).max(rhs.abs());
        let d = (lhs - rhs).abs();
        if d <= self.band(scale) {
            Agreement::Within
        } else if d > self.falsification.max(self.band(scale)) {
            Agreement::Falsified
        } else {
            Agreement::Marginal
        }
    }
}
