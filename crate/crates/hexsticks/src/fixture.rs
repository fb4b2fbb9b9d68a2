//! The comparison table as a JSON fixture: `[{name, flags: {...}, score}]`
//! with flags keyed `MNE STR LIG AMB DSP BIN ZERO ONE TRN`.

use std::collections::BTreeMap;

use hexsticks_core::criteria::{Criterion, SymbolSetProfile, TableRow};
use serde::{Deserialize, Serialize};

use crate::Error;

pub const TABLE1_JSON: &str = include_str!("../data/table1.json");

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RowRecord {
    name: String,
    flags: BTreeMap<String, bool>,
    score: usize,
}

/// Parses table rows, requiring every criterion exactly once.
pub fn parse_table(json: &str) -> Result<Vec<TableRow>, Error> {
    let records: Vec<RowRecord> = serde_json::from_str(json).map_err(|source| Error::Json {
        path: "table1.json".into(),
        source,
    })?;
    records
        .into_iter()
        .map(|r| {
            if let Some(unknown) = r.flags.keys().find(|k| Criterion::from_key(k).is_none()) {
                return Err(Error::Fixture(format!("{}: unknown criterion {unknown}", r.name)));
            }
            let mut flags = [false; 9];
            for (i, c) in Criterion::ALL.into_iter().enumerate() {
                flags[i] = *r
                    .flags
                    .get(c.key())
                    .ok_or_else(|| Error::Fixture(format!("{}: missing {c}", r.name)))?;
            }
            Ok(TableRow {
                profile: SymbolSetProfile::manual(r.name, flags),
                published_score: r.score,
            })
        })
        .collect()
}

/// The table shipped with the crate.
pub fn builtin_table() -> Vec<TableRow> {
    parse_table(TABLE1_JSON).expect("bundled table fixture is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use hexsticks_core::criteria::{score, table1};

    #[test]
    fn fixture_matches_core_table() {
        assert_eq!(builtin_table(), table1());
        for row in builtin_table() {
            assert_eq!(score(&row.profile), row.published_score);
        }
    }

    #[test]
    fn rejects_missing_and_unknown_keys() {
        let missing = r#"[{"name":"x","flags":{"MNE":true},"score":1}]"#;
        assert!(matches!(parse_table(missing), Err(Error::Fixture(_))));
        let unknown = r#"[{"name":"x","flags":{"0":true},"score":1}]"#;
        assert!(matches!(parse_table(unknown), Err(Error::Fixture(_))));
        assert!(matches!(parse_table("{"), Err(Error::Json { .. })));
    }
}
