//! Domain types shared by the whole pipeline.
//!
//! Everything here is immutable after construction, so values can be shared
//! freely across worker threads. Constructors enforce the structural
//! invariants; downstream modules assume they hold.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Number of base signals per timestep: gaze x, gaze y, velocity, pupil.
pub const NUM_SIGNALS: usize = 4;

/// Flattened dimensionality of an [`AugmentedFrame`]: (value, mask, gap) per signal.
pub const AUGMENTED_DIM: usize = 3 * NUM_SIGNALS;

/// Number of personality traits.
pub const NUM_TRAITS: usize = 5;

/// Number of tertile classes (Low / Medium / High).
pub const NUM_CLASSES: usize = 3;

/// The four base signals, in the canonical layout order used everywhere a
/// frame is flattened: gaze x, gaze y, velocity, pupil.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Signal {
    GazeX,
    GazeY,
    Velocity,
    Pupil,
}

impl Signal {
    pub const ALL: [Signal; NUM_SIGNALS] = [Signal::GazeX, Signal::GazeY, Signal::Velocity, Signal::Pupil];

    pub fn index(self) -> usize {
        match self {
            Signal::GazeX => 0,
            Signal::GazeY => 1,
            Signal::Velocity => 2,
            Signal::Pupil => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Signal::GazeX => "gaze_x",
            Signal::GazeY => "gaze_y",
            Signal::Velocity => "velocity",
            Signal::Pupil => "pupil",
        }
    }
}

/// Big Five personality traits (OCEAN).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PersonalityTrait {
    Openness,
    Conscientiousness,
    Extraversion,
    Agreeableness,
    Neuroticism,
}

impl PersonalityTrait {
    pub const ALL: [PersonalityTrait; NUM_TRAITS] = [
        PersonalityTrait::Openness,
        PersonalityTrait::Conscientiousness,
        PersonalityTrait::Extraversion,
        PersonalityTrait::Agreeableness,
        PersonalityTrait::Neuroticism,
    ];

    pub fn index(self) -> usize {
        match self {
            PersonalityTrait::Openness => 0,
            PersonalityTrait::Conscientiousness => 1,
            PersonalityTrait::Extraversion => 2,
            PersonalityTrait::Agreeableness => 3,
            PersonalityTrait::Neuroticism => 4,
        }
    }

    /// Single-letter code used in CSV headers and reports.
    pub fn code(self) -> &'static str {
        match self {
            PersonalityTrait::Openness => "O",
            PersonalityTrait::Conscientiousness => "C",
            PersonalityTrait::Extraversion => "E",
            PersonalityTrait::Agreeableness => "A",
            PersonalityTrait::Neuroticism => "N",
        }
    }

    pub fn full_name(self) -> &'static str {
        match self {
            PersonalityTrait::Openness => "Openness",
            PersonalityTrait::Conscientiousness => "Conscientiousness",
            PersonalityTrait::Extraversion => "Extraversion",
            PersonalityTrait::Agreeableness => "Agreeableness",
            PersonalityTrait::Neuroticism => "Neuroticism",
        }
    }

    pub fn from_code(code: &str) -> Option<PersonalityTrait> {
        Self::ALL.iter().copied().find(|t| t.code() == code)
    }
}

/// Tertile class of a trait score: Low = 1, Medium = 2, High = 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TertileLabel {
    Low,
    Medium,
    High,
}

impl TertileLabel {
    pub const ALL: [TertileLabel; NUM_CLASSES] = [TertileLabel::Low, TertileLabel::Medium, TertileLabel::High];

    /// Zero-based class index used for one-hot targets and confusion rows.
    pub fn class_index(self) -> usize {
        match self {
            TertileLabel::Low => 0,
            TertileLabel::Medium => 1,
            TertileLabel::High => 2,
        }
    }

    /// One-based class number as reported (1 = Low, 2 = Medium, 3 = High).
    pub fn class_number(self) -> u8 {
        self.class_index() as u8 + 1
    }

    pub fn from_class_index(idx: usize) -> Option<TertileLabel> {
        Self::ALL.get(idx).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            TertileLabel::Low => "Low",
            TertileLabel::Medium => "Medium",
            TertileLabel::High => "High",
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TypeError {
    #[error("sampling period {period_s} does not match rate {rate_hz} Hz (relative error {rel_err:e})")]
    PeriodRateMismatch { rate_hz: f64, period_s: f64, rel_err: f64 },
    #[error("sampling rate must be positive and finite, got {0}")]
    BadSamplingRate(f64),
    #[error("screen dimensions must be strictly positive, got {width}x{height}")]
    BadScreenDims { width: u32, height: u32 },
    #[error("session has {0} samples, need at least 2")]
    TooShort(usize),
    #[error("timestamps not strictly increasing at sample {index}")]
    NonMonotonicTimestamps { index: usize },
    #[error("inter-sample interval {got_s}s at sample {index} deviates more than 10% from period {expected_s}s")]
    IrregularInterval { index: usize, got_s: f64, expected_s: f64 },
    #[error("timestamp at sample {index} is not finite")]
    NonFiniteTimestamp { index: usize },
    #[error("trait score {score} outside the 1..=5 instrument scale")]
    ScoreOutOfRange { score: f64 },
    #[error("augmented frame violates {0}")]
    BadAugmentedFrame(&'static str),
}

/// Fixed recording parameters of one eye-tracking setup.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RecordingConfig {
    sampling_rate_hz: f64,
    sampling_period_s: f64,
    screen_width_px: u32,
    screen_height_px: u32,
}

impl RecordingConfig {
    /// Builds a config from the sampling rate; the period is derived as its
    /// reciprocal so the rate/period invariant holds by construction.
    pub fn new(sampling_rate_hz: f64, screen_width_px: u32, screen_height_px: u32) -> Result<Self, TypeError> {
        if !(sampling_rate_hz.is_finite() && sampling_rate_hz > 0.0) {
            return Err(TypeError::BadSamplingRate(sampling_rate_hz));
        }
        Self::from_parts(sampling_rate_hz, 1.0 / sampling_rate_hz, screen_width_px, screen_height_px)
    }

    /// Validates an explicit (rate, period) pair: the product must be 1
    /// within 1e-9 relative tolerance.
    pub fn from_parts(
        sampling_rate_hz: f64,
        sampling_period_s: f64,
        screen_width_px: u32,
        screen_height_px: u32,
    ) -> Result<Self, TypeError> {
        if !(sampling_rate_hz.is_finite() && sampling_rate_hz > 0.0 && sampling_period_s.is_finite() && sampling_period_s > 0.0) {
            return Err(TypeError::BadSamplingRate(sampling_rate_hz));
        }
        let rel_err = (sampling_rate_hz * sampling_period_s - 1.0).abs();
        if rel_err > 1e-9 {
            return Err(TypeError::PeriodRateMismatch {
                rate_hz: sampling_rate_hz,
                period_s: sampling_period_s,
                rel_err,
            });
        }
        if screen_width_px == 0 || screen_height_px == 0 {
            return Err(TypeError::BadScreenDims { width: screen_width_px, height: screen_height_px });
        }
        Ok(Self { sampling_rate_hz, sampling_period_s, screen_width_px, screen_height_px })
    }

    pub fn sampling_rate_hz(&self) -> f64 {
        self.sampling_rate_hz
    }

    pub fn sampling_period_s(&self) -> f64 {
        self.sampling_period_s
    }

    pub fn screen_width_px(&self) -> u32 {
        self.screen_width_px
    }

    pub fn screen_height_px(&self) -> u32 {
        self.screen_height_px
    }
}

impl Default for RecordingConfig {
    /// 60 Hz tracker over a 1024x576 recording, the reference apparatus.
    fn default() -> Self {
        Self::new(60.0, 1024, 576).expect("default recording config is valid")
    }
}

/// One raw tracker sample. A `None` field is genuinely absent data, never a
/// sentinel value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GazeSample {
    pub timestamp_s: f64,
    pub gaze_x_px: Option<f64>,
    pub gaze_y_px: Option<f64>,
    pub pupil_mm: Option<f64>,
}

impl GazeSample {
    pub fn gaze_present(&self) -> bool {
        self.gaze_x_px.is_some() && self.gaze_y_px.is_some()
    }
}

/// One participant-session of raw samples at a fixed sampling rate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SessionSeries {
    participant_id: String,
    samples: Vec<GazeSample>,
    config: RecordingConfig,
}

impl SessionSeries {
    /// Validates timestamps: strictly increasing, and every consecutive gap
    /// within 10% of the nominal sampling period. Resampling is out of
    /// scope, so violations are rejected here rather than repaired.
    pub fn new(participant_id: impl Into<String>, samples: Vec<GazeSample>, config: RecordingConfig) -> Result<Self, TypeError> {
        if samples.len() < 2 {
            return Err(TypeError::TooShort(samples.len()));
        }
        let period = config.sampling_period_s();
        for (i, s) in samples.iter().enumerate() {
            if !s.timestamp_s.is_finite() {
                return Err(TypeError::NonFiniteTimestamp { index: i });
            }
            if i > 0 {
                let dt = s.timestamp_s - samples[i - 1].timestamp_s;
                if dt <= 0.0 {
                    return Err(TypeError::NonMonotonicTimestamps { index: i });
                }
                if (dt - period).abs() > 0.10 * period {
                    return Err(TypeError::IrregularInterval { index: i, got_s: dt, expected_s: period });
                }
            }
        }
        Ok(Self { participant_id: participant_id.into(), samples, config })
    }

    pub fn participant_id(&self) -> &str {
        &self.participant_id
    }

    pub fn samples(&self) -> &[GazeSample] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn config(&self) -> &RecordingConfig {
        &self.config
    }
}

/// Per-timestep normalized feature values before missingness handling.
/// Gaze is mapped into [-1, 1]; pupil and velocity are z-scored.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FeatureFrame {
    pub gaze_x: Option<f64>,
    pub gaze_y: Option<f64>,
    pub pupil: Option<f64>,
    pub velocity: Option<f64>,
}

impl FeatureFrame {
    /// Values in the canonical signal order (gaze x, gaze y, velocity, pupil).
    pub fn by_signal(&self, signal: Signal) -> Option<f64> {
        match signal {
            Signal::GazeX => self.gaze_x,
            Signal::GazeY => self.gaze_y,
            Signal::Velocity => self.velocity,
            Signal::Pupil => self.pupil,
        }
    }
}

/// Missingness-aware frame: zero-filled values, validity mask and temporal
/// gaps, one triple per signal. Flattens to `AUGMENTED_DIM` = 12 entries.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AugmentedFrame {
    values: [f64; NUM_SIGNALS],
    mask: [bool; NUM_SIGNALS],
    gaps_s: [f64; NUM_SIGNALS],
}

impl AugmentedFrame {
    pub fn new(values: [f64; NUM_SIGNALS], mask: [bool; NUM_SIGNALS], gaps_s: [f64; NUM_SIGNALS]) -> Result<Self, TypeError> {
        for j in 0..NUM_SIGNALS {
            if !values[j].is_finite() || !gaps_s[j].is_finite() {
                return Err(TypeError::BadAugmentedFrame("finiteness"));
            }
            if gaps_s[j] < 0.0 {
                return Err(TypeError::BadAugmentedFrame("nonnegative gaps"));
            }
            if !mask[j] && values[j] != 0.0 {
                return Err(TypeError::BadAugmentedFrame("mask=0 implies value=0"));
            }
            if mask[j] && gaps_s[j] != 0.0 {
                return Err(TypeError::BadAugmentedFrame("mask=1 implies gap=0"));
            }
        }
        Ok(Self { values, mask, gaps_s })
    }

    pub fn values(&self) -> &[f64; NUM_SIGNALS] {
        &self.values
    }

    pub fn mask(&self) -> &[bool; NUM_SIGNALS] {
        &self.mask
    }

    pub fn gaps_s(&self) -> &[f64; NUM_SIGNALS] {
        &self.gaps_s
    }

    /// Flattens to the fixed 12-entry layout: (value, mask, gap) per signal,
    /// signals in `Signal::ALL` order. Index positions are load-bearing for
    /// serialized features and model inputs.
    pub fn flatten(&self) -> [f64; AUGMENTED_DIM] {
        let mut out = [0.0; AUGMENTED_DIM];
        for (j, _) in Signal::ALL.iter().enumerate() {
            out[3 * j] = self.values[j];
            out[3 * j + 1] = if self.mask[j] { 1.0 } else { 0.0 };
            out[3 * j + 2] = self.gaps_s[j];
        }
        out
    }

    /// Column names matching [`AugmentedFrame::flatten`], used by the CSV export.
    pub fn column_names() -> [String; AUGMENTED_DIM] {
        let mut names: Vec<String> = Vec::with_capacity(AUGMENTED_DIM);
        for s in Signal::ALL {
            names.push(s.name().to_string());
            names.push(format!("{}_mask", s.name()));
            names.push(format!("{}_gap_s", s.name()));
        }
        names.try_into().expect("exactly 12 names")
    }
}

/// A fixed-length window over one segment of a session's augmented sequence.
/// Windows are index ranges, not copies; `session_idx` addresses the dataset
/// the window was cut from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Window {
    pub session_idx: usize,
    pub participant_id: String,
    /// Globally unique segment id the window lies in.
    pub segment_id: usize,
    /// Start index into the session's augmented sequence.
    pub start: usize,
    pub len: usize,
    pub label: TertileLabel,
    pub fold: usize,
}

impl Window {
    pub fn range(&self) -> std::ops::Range<usize> {
        self.start..self.start + self.len
    }
}

/// Continuous Big Five scores with their derived tertile labels. Labels are
/// only ever produced by the tertile cut operation; there is no way to build
/// a profile with hand-set labels outside this crate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraitProfile {
    participant_id: String,
    scores: [f64; NUM_TRAITS],
    labels: [TertileLabel; NUM_TRAITS],
}

impl TraitProfile {
    pub(crate) fn from_parts(
        participant_id: impl Into<String>,
        scores: [f64; NUM_TRAITS],
        labels: [TertileLabel; NUM_TRAITS],
    ) -> Result<Self, TypeError> {
        for &s in &scores {
            if !(1.0..=5.0).contains(&s) {
                return Err(TypeError::ScoreOutOfRange { score: s });
            }
        }
        Ok(Self { participant_id: participant_id.into(), scores, labels })
    }

    pub fn participant_id(&self) -> &str {
        &self.participant_id
    }

    pub fn scores(&self) -> &[f64; NUM_TRAITS] {
        &self.scores
    }

    pub fn labels(&self) -> &[TertileLabel; NUM_TRAITS] {
        &self.labels
    }

    pub fn score(&self, t: PersonalityTrait) -> f64 {
        self.scores[t.index()]
    }

    pub fn label(&self, t: PersonalityTrait) -> TertileLabel {
        self.labels[t.index()]
    }
}

/// Where normalization statistics were fitted. Only training-fold data is a
/// legal source; the tag travels with the stats so consumers can check it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StatsProvenance {
    TrainingFoldsOnly,
}

/// Z-score parameters for pupil diameter and gaze velocity, fitted on the
/// observed samples of the training folds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormalizationStats {
    pub(crate) pupil_mean: f64,
    pub(crate) pupil_std: f64,
    pub(crate) velocity_mean: f64,
    pub(crate) velocity_std: f64,
    pub(crate) provenance: StatsProvenance,
}

impl NormalizationStats {
    pub fn pupil_mean(&self) -> f64 {
        self.pupil_mean
    }

    pub fn pupil_std(&self) -> f64 {
        self.pupil_std
    }

    pub fn velocity_mean(&self) -> f64 {
        self.velocity_mean
    }

    pub fn velocity_std(&self) -> f64 {
        self.velocity_std
    }

    pub fn provenance(&self) -> StatsProvenance {
        self.provenance
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(t: f64) -> GazeSample {
        GazeSample { timestamp_s: t, gaze_x_px: Some(1.0), gaze_y_px: Some(2.0), pupil_mm: Some(3.0) }
    }

    #[test]
    fn recording_config_checks_rate_period_product() {
        assert!(RecordingConfig::from_parts(60.0, 1.0 / 60.0, 100, 100).is_ok());
        let err = RecordingConfig::from_parts(60.0, 0.02, 100, 100).unwrap_err();
        assert!(matches!(err, TypeError::PeriodRateMismatch { .. }));
        assert!(matches!(RecordingConfig::new(60.0, 0, 100), Err(TypeError::BadScreenDims { .. })));
    }

    #[test]
    fn session_rejects_non_monotonic_timestamps() {
        let cfg = RecordingConfig::default();
        let dt = cfg.sampling_period_s();
        let samples = vec![sample(0.0), sample(dt), sample(dt * 0.9)];
        let err = SessionSeries::new("p1", samples, cfg).unwrap_err();
        assert_eq!(err, TypeError::NonMonotonicTimestamps { index: 2 });
    }

    #[test]
    fn session_rejects_irregular_intervals() {
        let cfg = RecordingConfig::default();
        let dt = cfg.sampling_period_s();
        let samples = vec![sample(0.0), sample(dt), sample(dt + 1.2 * dt)];
        assert!(matches!(
            SessionSeries::new("p1", samples, cfg).unwrap_err(),
            TypeError::IrregularInterval { index: 2, .. }
        ));
        // 10% slack is allowed
        let samples = vec![sample(0.0), sample(dt * 1.05)];
        assert!(SessionSeries::new("p1", samples, cfg).is_ok());
    }

    #[test]
    fn session_requires_two_samples() {
        let cfg = RecordingConfig::default();
        assert_eq!(SessionSeries::new("p1", vec![sample(0.0)], cfg).unwrap_err(), TypeError::TooShort(1));
    }

    #[test]
    fn augmented_frame_enforces_mask_value_coupling() {
        let ok = AugmentedFrame::new([0.0, 0.5, 0.0, 1.0], [false, true, true, true], [0.1, 0.0, 0.0, 0.0]);
        assert!(ok.is_ok());
        let bad_value = AugmentedFrame::new([0.2, 0.0, 0.0, 0.0], [false, true, true, true], [0.1, 0.0, 0.0, 0.0]);
        assert!(bad_value.is_err());
        let bad_gap = AugmentedFrame::new([0.2, 0.0, 0.0, 0.0], [true, true, true, true], [0.1, 0.0, 0.0, 0.0]);
        assert!(bad_gap.is_err());
    }

    /// Golden layout test: the 12 flattened positions are pinned to the
    /// interleaved (value, mask, gap) x (gaze_x, gaze_y, velocity, pupil) order.
    #[test]
    fn flatten_layout_is_pinned() {
        let frame = AugmentedFrame::new(
            [0.25, -0.5, 100.0, 0.0],
            [true, true, true, false],
            [0.0, 0.0, 0.0, 0.05],
        )
        .unwrap();
        let flat = frame.flatten();
        let expected = [
            0.25, 1.0, 0.0, // gaze_x: value, mask, gap
            -0.5, 1.0, 0.0, // gaze_y
            100.0, 1.0, 0.0, // velocity
            0.0, 0.0, 0.05, // pupil (missing)
        ];
        assert_eq!(flat, expected);
        let names = AugmentedFrame::column_names();
        assert_eq!(names[0], "gaze_x");
        assert_eq!(names[1], "gaze_x_mask");
        assert_eq!(names[2], "gaze_x_gap_s");
        assert_eq!(names[6], "velocity");
        assert_eq!(names[9], "pupil");
        assert_eq!(names[11], "pupil_gap_s");
    }

    #[test]
    fn trait_profile_rejects_out_of_scale_scores() {
        let labels = [TertileLabel::Low; NUM_TRAITS];
        assert!(TraitProfile::from_parts("p", [1.0, 2.0, 3.0, 4.0, 5.0], labels).is_ok());
        assert!(TraitProfile::from_parts("p", [0.9, 2.0, 3.0, 4.0, 5.0], labels).is_err());
    }

    #[test]
    fn core_types_round_trip_through_serde() {
        let cfg = RecordingConfig::default();
        let session = SessionSeries::new(
            "p7",
            vec![
                GazeSample { timestamp_s: 0.0, gaze_x_px: Some(10.0), gaze_y_px: None, pupil_mm: Some(3.3) },
                GazeSample { timestamp_s: 1.0 / 60.0, gaze_x_px: None, gaze_y_px: None, pupil_mm: None },
            ],
            cfg,
        )
        .unwrap();
        let json = serde_json::to_string(&session).unwrap();
        let back: SessionSeries = serde_json::from_str(&json).unwrap();
        assert_eq!(session, back);

        let frame = AugmentedFrame::new([0.0, 0.1, 0.2, 0.3], [false, true, true, true], [0.4, 0.0, 0.0, 0.0]).unwrap();
        let json = serde_json::to_string(&frame).unwrap();
        let back: AugmentedFrame = serde_json::from_str(&json).unwrap();
        assert_eq!(frame, back);

        let profile = TraitProfile::from_parts(
            "p7",
            [1.0, 2.5, 3.0, 4.5, 5.0],
            [
                TertileLabel::Low,
                TertileLabel::Medium,
                TertileLabel::Medium,
                TertileLabel::High,
                TertileLabel::High,
            ],
        )
        .unwrap();
        let json = serde_json::to_string(&profile).unwrap();
        let back: TraitProfile = serde_json::from_str(&json).unwrap();
        assert_eq!(profile, back);
    }
}
