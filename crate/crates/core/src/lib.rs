//! Missing-data-aware gaze time-series classification.
//!
//! The pipeline turns raw eye-tracking recordings into augmented sequences
//! (values + validity masks + temporal gaps), cuts them into leakage-free
//! windows, and classifies Low/Medium/High tertiles of each Big Five trait
//! with a bidirectional LSTM trained from scratch. A handcrafted-feature
//! random-forest baseline and a synthetic data generator complete the
//! ablation and verification tooling.

pub mod baseline;
pub mod eval;
pub mod experiment;
pub mod featurize;
pub mod ingest;
pub mod model;
pub mod rng;
pub mod split;
pub mod synth;
pub mod train;
pub mod types;

pub use types::{
    AugmentedFrame, FeatureFrame, GazeSample, NormalizationStats, PersonalityTrait, RecordingConfig,
    SessionSeries, Signal, StatsProvenance, TertileLabel, TraitProfile, TypeError, Window, AUGMENTED_DIM,
    NUM_CLASSES, NUM_SIGNALS, NUM_TRAITS,
};
