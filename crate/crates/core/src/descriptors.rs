//! JSON descriptors: the external representation of regions and shuffles.
//!
//! Regions are written as
//! `{"type":"hexagon","a":3,"b":8,"c":4,"X":[2,3,5,8,9,11],"Y":[3,7]}` or
//! `{"type":"trapezoid","m":8,"n":5,"S":[1,4,5,9,12]}`, shuffles as
//! `{"source": <hexagon>, "Xp": [...], "Yp": [...]}`. Keys are exactly as
//! shown; dent arrays must be strictly increasing (checked when the
//! descriptor is built into a region, so it reports as a region-validity
//! error, not a parse error).
//!
//! Parsing is strict: unknown keys are rejected, and the `"barrier"` key in
//! particular gets a dedicated "not implemented" message so that inputs
//! written for barrier-refined shuffling fail loudly instead of being
//! silently reinterpreted.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::regions::{CellGrid, DentSet, DentedHexagon, RegionError, Trapezoid};
use crate::shuffle::{ShuffleError, ShuffleInstance};

/// Errors from reading a descriptor's JSON text. All of these mean the
/// input does not conform to the descriptor schema; region validity is
/// checked later, by [`RegionDescriptor::build`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DescriptorError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("descriptor must be a JSON object")]
    NotAnObject,
    #[error("missing \"type\" key; expected \"hexagon\" or \"trapezoid\"")]
    MissingType,
    #[error("unknown region type {0:?}; expected \"hexagon\" or \"trapezoid\"")]
    UnknownType(String),
    #[error("\"barrier\" shuffles are not implemented")]
    BarrierUnsupported,
    #[error("unexpected key {0:?}")]
    UnexpectedKey(String),
    #[error("shuffle source must be a hexagon region")]
    SourceNotHexagon,
    #[error("malformed descriptor: {0}")]
    Shape(String),
}

/// A region as it appears in JSON, prior to validity checking.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum RegionDescriptor {
    Hexagon {
        a: u32,
        b: u32,
        c: u32,
        #[serde(rename = "X")]
        x: Vec<u32>,
        #[serde(rename = "Y")]
        y: Vec<u32>,
    },
    Trapezoid {
        m: u32,
        n: u32,
        #[serde(rename = "S")]
        s: Vec<u32>,
    },
}

/// A shuffle as it appears in JSON: a source hexagon plus the reassigned
/// dent sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShuffleDescriptor {
    pub source: RegionDescriptor,
    #[serde(rename = "Xp")]
    pub xp: Vec<u32>,
    #[serde(rename = "Yp")]
    pub yp: Vec<u32>,
}

/// A validated region of either kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Region {
    Hexagon(DentedHexagon),
    Trapezoid(Trapezoid),
}

/// Why building a [`ShuffleDescriptor`] failed: the source region itself is
/// invalid, or the dent reassignment is not a shuffling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShuffleBuildError {
    #[error(transparent)]
    Region(#[from] RegionError),
    #[error(transparent)]
    Shuffle(#[from] ShuffleError),
}

fn check_keys(
    obj: &serde_json::Map<String, Value>,
    allowed: &[&str],
) -> Result<(), DescriptorError> {
    if obj.contains_key("barrier") {
        return Err(DescriptorError::BarrierUnsupported);
    }
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(key) => Err(DescriptorError::UnexpectedKey(key.clone())),
        None => Ok(()),
    }
}

fn check_region_value(value: &Value) -> Result<(), DescriptorError> {
    let obj = value.as_object().ok_or(DescriptorError::NotAnObject)?;
    if obj.contains_key("barrier") {
        return Err(DescriptorError::BarrierUnsupported);
    }
    let tag = obj
        .get("type")
        .and_then(Value::as_str)
        .ok_or(DescriptorError::MissingType)?;
    let allowed: &[&str] = match tag {
        "hexagon" => &["type", "a", "b", "c", "X", "Y"],
        "trapezoid" => &["type", "m", "n", "S"],
        other => return Err(DescriptorError::UnknownType(other.to_string())),
    };
    check_keys(obj, allowed)
}

/// Parses a region descriptor from JSON text.
pub fn parse_region(json: &str) -> Result<RegionDescriptor, DescriptorError> {
    let value: Value =
        serde_json::from_str(json).map_err(|e| DescriptorError::Json(e.to_string()))?;
    check_region_value(&value)?;
    serde_json::from_value(value).map_err(|e| DescriptorError::Shape(e.to_string()))
}

/// Parses a shuffle descriptor from JSON text.
pub fn parse_shuffle(json: &str) -> Result<ShuffleDescriptor, DescriptorError> {
    let value: Value =
        serde_json::from_str(json).map_err(|e| DescriptorError::Json(e.to_string()))?;
    let obj = value.as_object().ok_or(DescriptorError::NotAnObject)?;
    check_keys(obj, &["source", "Xp", "Yp"])?;
    if let Some(source) = obj.get("source") {
        check_region_value(source)?;
        if source.get("type").and_then(Value::as_str) != Some("hexagon") {
            return Err(DescriptorError::SourceNotHexagon);
        }
    }
    serde_json::from_value(value).map_err(|e| DescriptorError::Shape(e.to_string()))
}

impl RegionDescriptor {
    /// Validates the descriptor into a region.
    pub fn build(&self) -> Result<Region, RegionError> {
        match self {
            RegionDescriptor::Hexagon { a, b, c, x, y } => {
                let x = DentSet::new(x.clone())?;
                let y = DentSet::new(y.clone())?;
                Ok(Region::Hexagon(DentedHexagon::new(*a, *b, *c, x, y)?))
            }
            RegionDescriptor::Trapezoid { m, n, s } => {
                let s = DentSet::new(s.clone())?;
                Ok(Region::Trapezoid(Trapezoid::new(*m, *n, s)?))
            }
        }
    }

    /// The descriptor of a validated region (the round-trip inverse of
    /// [`build`](Self::build)).
    pub fn from_region(region: &Region) -> Self {
        match region {
            Region::Hexagon(h) => RegionDescriptor::Hexagon {
                a: h.a(),
                b: h.b(),
                c: h.c(),
                x: h.x().iter().collect(),
                y: h.y().iter().collect(),
            },
            Region::Trapezoid(t) => RegionDescriptor::Trapezoid {
                m: t.m(),
                n: t.n(),
                s: t.dents().iter().collect(),
            },
        }
    }
}

impl ShuffleDescriptor {
    /// Validates the descriptor into a shuffle instance.
    pub fn build(&self) -> Result<ShuffleInstance, ShuffleBuildError> {
        let source = match self.source.build()? {
            Region::Hexagon(h) => h,
            Region::Trapezoid(_) => {
                return Err(ShuffleError::NotAShuffle {
                    reason: "source must be a hexagon".into(),
                }
                .into())
            }
        };
        let xp = DentSet::new(self.xp.clone()).map_err(ShuffleBuildError::Region)?;
        let yp = DentSet::new(self.yp.clone()).map_err(ShuffleBuildError::Region)?;
        Ok(ShuffleInstance::new(source, xp, yp)?)
    }
}

impl Region {
    /// The unit-triangle grid of this region.
    pub fn build_cells(&self) -> CellGrid {
        match self {
            Region::Hexagon(h) => h.build_cells(),
            Region::Trapezoid(t) => t.build_cells(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEXAGON_JSON: &str =
        r#"{"type":"hexagon","a":3,"b":8,"c":4,"X":[2,3,5,8,9,11],"Y":[3,7]}"#;
    const TRAPEZOID_JSON: &str = r#"{"type":"trapezoid","m":8,"n":5,"S":[1,4,5,9,12]}"#;

    #[test]
    fn parses_and_builds_the_documented_examples() {
        let hex = parse_region(HEXAGON_JSON).unwrap().build().unwrap();
        match &hex {
            Region::Hexagon(h) => {
                assert_eq!((h.a(), h.b(), h.c()), (3, 8, 4));
                assert_eq!(h.x().iter().collect::<Vec<_>>(), vec![2, 3, 5, 8, 9, 11]);
            }
            _ => panic!("expected hexagon"),
        }
        let trap = parse_region(TRAPEZOID_JSON).unwrap().build().unwrap();
        match &trap {
            Region::Trapezoid(t) => assert_eq!((t.m(), t.n()), (8, 5)),
            _ => panic!("expected trapezoid"),
        }
    }

    #[test]
    fn descriptors_round_trip_through_serialization() {
        for json in [HEXAGON_JSON, TRAPEZOID_JSON] {
            let descriptor = parse_region(json).unwrap();
            let echoed = serde_json::to_string(&descriptor).unwrap();
            assert_eq!(echoed, json);
            assert_eq!(parse_region(&echoed).unwrap(), descriptor);
            // And through the validated region.
            let region = descriptor.build().unwrap();
            assert_eq!(RegionDescriptor::from_region(&region), descriptor);
        }
    }

    #[test]
    fn rejects_malformed_json_and_unknown_shapes() {
        assert!(matches!(
            parse_region("{\"type\":"),
            Err(DescriptorError::Json(_))
        ));
        assert!(matches!(
            parse_region("[1,2]"),
            Err(DescriptorError::NotAnObject)
        ));
        assert!(matches!(
            parse_region(r#"{"a":1}"#),
            Err(DescriptorError::MissingType)
        ));
        assert!(matches!(
            parse_region(r#"{"type":"hex","a":1}"#),
            Err(DescriptorError::UnknownType(_))
        ));
        assert!(matches!(
            parse_region(r#"{"type":"hexagon","a":1,"b":1,"c":1,"X":[],"Y":[],"Z":[]}"#),
            Err(DescriptorError::UnexpectedKey(_))
        ));
        // Missing field caught by the typed parse.
        assert!(matches!(
            parse_region(r#"{"type":"hexagon","a":1,"b":1,"X":[],"Y":[]}"#),
            Err(DescriptorError::Shape(_))
        ));
        // Wrong type for a field likewise.
        assert!(matches!(
            parse_region(r#"{"type":"trapezoid","m":8,"n":5,"S":"all"}"#),
            Err(DescriptorError::Shape(_))
        ));
    }

    #[test]
    fn barrier_inputs_are_rejected_with_a_dedicated_message() {
        let shuffled = format!(
            r#"{{"source": {HEXAGON_JSON}, "Xp": [3,7,9], "Yp": [2,3,5,8,11], "barrier": [1]}}"#
        );
        let err = parse_shuffle(&shuffled).unwrap_err();
        assert_eq!(err, DescriptorError::BarrierUnsupported);
        assert!(err.to_string().contains("not implemented"));
        // Also inside a region descriptor, even an otherwise-untyped one.
        assert_eq!(
            parse_region(r#"{"barrier": [1]}"#).unwrap_err(),
            DescriptorError::BarrierUnsupported
        );
    }

    #[test]
    fn unsorted_dents_parse_but_fail_region_validation() {
        let descriptor = parse_region(r#"{"type":"trapezoid","m":2,"n":2,"S":[3,1]}"#).unwrap();
        assert!(matches!(
            descriptor.build(),
            Err(RegionError::NotStrictlyIncreasing { .. })
        ));
    }

    #[test]
    fn shuffle_descriptor_builds_the_running_example() {
        let json = format!(r#"{{"source": {HEXAGON_JSON}, "Xp": [3,7,9], "Yp": [2,3,5,8,11]}}"#);
        let shuffle = parse_shuffle(&json).unwrap().build().unwrap();
        assert_eq!(shuffle.flipped_down(), 4);
        assert_eq!(shuffle.flipped_up(), 1);
        assert_eq!(
            (
                shuffle.target().a(),
                shuffle.target().b(),
                shuffle.target().c()
            ),
            (6, 5, 7)
        );
    }

    #[test]
    fn shuffle_parse_rejects_bad_shapes() {
        assert!(matches!(
            parse_shuffle(&format!(
                r#"{{"source": {TRAPEZOID_JSON}, "Xp": [], "Yp": []}}"#
            )),
            Err(DescriptorError::SourceNotHexagon)
        ));
        assert!(matches!(
            parse_shuffle(r#"{"Xp": [], "Yp": []}"#),
            Err(DescriptorError::Shape(_))
        ));
        assert!(matches!(
            parse_shuffle(&format!(
                r#"{{"source": {HEXAGON_JSON}, "Xp": [], "Yp": [], "extra": 1}}"#
            )),
            Err(DescriptorError::UnexpectedKey(_))
        ));
    }

    #[test]
    fn shuffle_build_distinguishes_region_and_shuffle_failures() {
        // Invalid source region (unequal slack).
        let bad_region =
            r#"{"source": {"type":"hexagon","a":1,"b":1,"c":1,"X":[1],"Y":[]}, "Xp":[1], "Yp":[]}"#;
        assert!(matches!(
            parse_shuffle(bad_region).unwrap().build(),
            Err(ShuffleBuildError::Region(_))
        ));
        // Valid source, non-shuffling reassignment.
        let bad_shuffle =
            format!(r#"{{"source": {HEXAGON_JSON}, "Xp": [3,7,9], "Yp": [2,5,8,11]}}"#);
        assert!(matches!(
            parse_shuffle(&bad_shuffle).unwrap().build(),
            Err(ShuffleBuildError::Shuffle(ShuffleError::NotAShuffle { .. }))
        ));
    }
}
