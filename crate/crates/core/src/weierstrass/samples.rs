//! Bundled curve files, by name.

macro_rules! samples {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../data/curves/", $name, ".json")))),*]
    };
}

/// `(name, JSON text)` for every bundled curve.
pub const SAMPLES: &[(&str, &str)] = samples!(
    "four_cusps",
    "a8_three_a0",
    "two_a4_two_a0",
    "a7_a1_two_a0",
    "a5_a2_a1_a0",
    "two_a3_two_a1",
    "e8_two_a0",
    "e8_cusp",
    "two_d4",
    "four_cusps_perturbed",
    "cusp_fiber",
    "generic",
    "zero_discriminant",
);

pub fn sample(name: &str) -> Option<&'static str> {
    SAMPLES.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}
