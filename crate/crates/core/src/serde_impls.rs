//! JSON shapes:
//!
//! - arc: `[left, right]` with `−∞` written as the string `"-inf"`
//! - arc set: `{"arcs": [["-inf",5],[0,3]]}`
//! - saturated set: the same plus `"saturated": true`, re-verified on input
//! - partition: `{"blocks": [["-inf",5],[0,1,2]]}`
//! - exceptional sequence: `{"sequence": [[0,1],[0,2]]}`

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::arc::{Arc, ArcSet, Endpoint};
use crate::exceptional::ExceptionalSequence;
use crate::ncp::NCPartition;
use crate::saturation::SaturatedArcSet;

impl Serialize for Endpoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Endpoint::MinusInfinity => s.serialize_str("-inf"),
            Endpoint::Finite(z) => s.serialize_i64(*z),
        }
    }
}

impl<'de> Deserialize<'de> for Endpoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(z) => Ok(Endpoint::Finite(z)),
            Raw::Str(s) if s == "-inf" => Ok(Endpoint::MinusInfinity),
            Raw::Str(s) => Err(de::Error::custom(format!(
                "expected an integer or \"-inf\", got {s:?}"
            ))),
        }
    }
}

impl Serialize for Arc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (self.left(), self.right()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Arc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (a, b) = <(Endpoint, Endpoint)>::deserialize(d)?;
        Arc::new(a, b).map_err(de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArcSetRepr {
    arcs: Vec<Arc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    saturated: Option<bool>,
}

impl Serialize for ArcSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ArcSetRepr {
            arcs: self.iter().collect(),
            saturated: None,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ArcSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = ArcSetRepr::deserialize(d)?;
        Ok(repr.arcs.into_iter().collect())
    }
}

impl Serialize for SaturatedArcSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ArcSetRepr {
            arcs: self.iter().collect(),
            saturated: Some(true),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SaturatedArcSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = ArcSetRepr::deserialize(d)?;
        SaturatedArcSet::new(repr.arcs.into_iter().collect()).map_err(de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartitionRepr {
    blocks: Vec<Vec<Endpoint>>,
}

impl Serialize for NCPartition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PartitionRepr {
            blocks: self.blocks().map(|b| b.iter().copied().collect()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for NCPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = PartitionRepr::deserialize(d)?;
        NCPartition::new(repr.blocks).map_err(de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SequenceRepr {
    sequence: Vec<Arc>,
}

impl Serialize for ExceptionalSequence {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SequenceRepr {
            sequence: self.arcs().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExceptionalSequence {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = SequenceRepr::deserialize(d)?;
        ExceptionalSequence::new(repr.sequence).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::saturation::saturate;
    use crate::testutil::small_set;
    use proptest::prelude::*;

    fn set(arcs: &[&str]) -> ArcSet {
        arcs.iter().map(|s| s.parse::<Arc>().unwrap()).collect()
    }

    #[test]
    fn arc_set_shape() {
        let s = set(&["0..3", "-inf..5"]);
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"arcs":[["-inf",5],[0,3]]}"#
        );
        let back: ArcSet = serde_json::from_str(r#"{"arcs": [[0,3], ["-inf",5], [0,3]]}"#).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<ArcSet>(r#"{"arcs": [[3,3]]}"#).is_err());
        assert!(serde_json::from_str::<ArcSet>(r#"{"arcs": [[0,"-inf"]]}"#).is_err());
        assert!(serde_json::from_str::<ArcSet>(r#"{"arcs": [["inf",2]]}"#).is_err());
    }

    #[test]
    fn saturated_shape() {
        let s = saturate(&set(&["0..1", "1..2"]));
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"arcs":[[0,1],[0,2],[1,2]],"saturated":true}"#);
        assert_eq!(serde_json::from_str::<SaturatedArcSet>(&json).unwrap(), s);
        let bad = r#"{"arcs":[[0,1],[1,2]],"saturated":true}"#;
        let err = serde_json::from_str::<SaturatedArcSet>(bad).unwrap_err();
        assert!(err.to_string().contains("not saturated"));
    }

    #[test]
    fn partition_shape() {
        let p: NCPartition =
            serde_json::from_str(r#"{"blocks": [[2,1,0], [5,"-inf"], [7]]}"#).unwrap();
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"blocks":[["-inf",5],[0,1,2]]}"#
        );
        assert!(serde_json::from_str::<NCPartition>(r#"{"blocks": [[0,2],[1,3]]}"#).is_err());
        assert!(serde_json::from_str::<NCPartition>(r#"{"blocks": [[0,2],[2,3]]}"#).is_err());
    }

    #[test]
    fn sequence_shape() {
        let e: ExceptionalSequence =
            serde_json::from_str(r#"{"sequence": [[0,1],[0,2],[0,3]]}"#).unwrap();
        assert_eq!(e.len(), 3);
        assert_eq!(
            serde_json::to_string(&e).unwrap(),
            r#"{"sequence":[[0,1],[0,2],[0,3]]}"#
        );
        assert!(
            serde_json::from_str::<ExceptionalSequence>(r#"{"sequence": [[1,3],[0,2]]}"#).is_err()
        );
    }

    proptest! {
        #[test]
        fn json_roundtrip(f in small_set()) {
            let s = saturate(&f);
            let json = serde_json::to_string(&s).unwrap();
            prop_assert_eq!(serde_json::from_str::<SaturatedArcSet>(&json).unwrap(), s);
            let json = serde_json::to_string(&f).unwrap();
            prop_assert_eq!(serde_json::from_str::<ArcSet>(&json).unwrap(), f);
        }
    }
}
