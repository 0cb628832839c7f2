//! JSON document format for set functions.
//!
//! ```json
//! {"n": 2, "values": {"by_subset": {"": 0, "1": 3, "2": -1, "1,2": 2}}}
//! {"n": 2, "values": {"by_mask": [0, 3, -1, 2]}}
//! ```
//!
//! `by_subset` keys are comma-joined 1-based elements; omitted subsets are 0.
//! `by_mask` and `by_subset` are also accepted at the top level next to `n`.
//! Writers always emit `by_subset` with every key, in mask order.

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::setfunction::{check_ground_set, SetFunction};
use crate::subset::Subset;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Values {
    by_mask: Option<Vec<f64>>,
    by_subset: Option<BTreeMap<String, f64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    n: usize,
    values: Option<Values>,
    by_mask: Option<Vec<f64>>,
    by_subset: Option<BTreeMap<String, f64>>,
}

pub fn parse_set_function(text: &str) -> Result<SetFunction> {
    let doc: Document =
        serde_json::from_str(text).map_err(|e| Error::parse("document", e.to_string()))?;
    check_ground_set(doc.n).map_err(|e| Error::parse("n", e.to_string()))?;
    let n = doc.n;

    let (by_mask, by_subset) = match doc.values {
        Some(v) => {
            if doc.by_mask.is_some() || doc.by_subset.is_some() {
                return Err(Error::parse("values", "given both nested and at top level"));
            }
            (v.by_mask, v.by_subset)
        }
        None => (doc.by_mask, doc.by_subset),
    };

    match (by_mask, by_subset) {
        (Some(values), None) => SetFunction::new(n, values)
            .map_err(|e| Error::parse("by_mask", e.to_string())),
        (None, Some(map)) => {
            let mut values = vec![0.0; 1 << n];
            let mut seen = vec![false; 1 << n];
            for (key, value) in map {
                let field = format!("by_subset[{key:?}]");
                let s: Subset = key.parse().map_err(|e: Error| Error::parse(&field, e.to_string()))?;
                if !s.fits(n) {
                    return Err(Error::parse(field, format!("subset is not contained in [{n}]")));
                }
                if std::mem::replace(&mut seen[s.index()], true) {
                    return Err(Error::parse(field, "subset listed twice"));
                }
                values[s.index()] = value;
            }
            SetFunction::new(n, values).map_err(|e| Error::parse("by_subset", e.to_string()))
        }
        (Some(_), Some(_)) => Err(Error::parse("values", "give either by_mask or by_subset, not both")),
        (None, None) => Err(Error::parse("values", "missing by_mask or by_subset")),
    }
}

struct BySubset<'a>(&'a SetFunction);

impl Serialize for BySubset<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let f = self.0;
        let mut map = serializer.serialize_map(Some(f.values().len()))?;
        for s in Subset::all(f.n()) {
            map.serialize_entry(&s.to_string(), &f.get(s))?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct OutValues<'a> {
    by_subset: BySubset<'a>,
}

#[derive(Serialize)]
struct OutDocument<'a> {
    n: usize,
    values: OutValues<'a>,
}

/// Pretty-printed `by_subset` document with a trailing newline.
pub fn write_set_function(f: &SetFunction) -> String {
    let doc = OutDocument {
        n: f.n(),
        values: OutValues {
            by_subset: BySubset(f),
        },
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("finite values serialize");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_forms_parse() {
        let a = parse_set_function(r#"{"n": 2, "values": {"by_mask": [0, 3, -1, 2]}}"#).unwrap();
        let b = parse_set_function(r#"{"n": 2, "values": {"by_subset": {"1": 3, "2": -1, "2,1": 2}}}"#)
            .unwrap();
        let c = parse_set_function(r#"{"n": 2, "by_mask": [0, 3, -1, 2]}"#).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.values(), &[0.0, 3.0, -1.0, 2.0]);
    }

    #[test]
    fn errors_name_the_field() {
        let cases = [
            (r#"{"n": 0, "by_mask": [0]}"#, "n"),
            (r#"{"n": 2, "by_mask": [0, 1]}"#, "by_mask"),
            (r#"{"n": 2, "by_subset": {"3": 1}}"#, "by_subset[\"3\"]"),
            (r#"{"n": 2, "by_subset": {"1,2": 1, "2,1": 2}}"#, "by_subset[\"2,1\"]"),
            (r#"{"n": 2, "by_subset": {"x": 1}}"#, "by_subset[\"x\"]"),
            (r#"{"n": 2}"#, "values"),
            (r#"{"n": 2, "by_mask": [0,0,0,0], "by_subset": {}}"#, "values"),
            (r#"{"n": 2, "bogus": 1}"#, "document"),
            ("not json", "document"),
        ];
        for (text, field) in cases {
            match parse_set_function(text) {
                Err(Error::Parse { field: f, .. }) => assert_eq!(f, field, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn writer_emits_every_key_in_mask_order() {
        let f = SetFunction::new(2, vec![0.0, 0.1, -1.0, 1.0 / 3.0]).unwrap();
        let text = write_set_function(&f);
        let keys: Vec<_> = ["\"\"", "\"1\"", "\"2\"", "\"1,2\""]
            .iter()
            .map(|k| text.find(k).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(parse_set_function(&text).unwrap(), f);
    }
}
