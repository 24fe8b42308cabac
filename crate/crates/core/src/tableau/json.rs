use serde::{Deserialize, Serialize};

use crate::error::TableauError;

use super::{Entry, SetTableau, StrictPartition};

/// A cell entry on the wire: unprimed letters are integers, primed letters
/// are strings such as `"2'"`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub(crate) enum Token {
    Plain(u32),
    Text(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub(crate) struct TableauJson {
    shape: Vec<u32>,
    #[serde(default)]
    multiset: bool,
    rows: Vec<Vec<Vec<Token>>>,
}

impl From<SetTableau> for TableauJson {
    fn from(t: SetTableau) -> Self {
        let rows = t
            .rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| {
                        cell.iter()
                            .map(|e| if e.is_primed() { Token::Text(e.to_string()) } else { Token::Plain(e.value()) })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        TableauJson { shape: t.shape().parts().to_vec(), multiset: t.is_multiset(), rows }
    }
}

fn token_entry(tok: &Token, path: impl Fn() -> String) -> Result<Entry, TableauError> {
    let bad = |msg: &str| TableauError::Parse { position: path(), message: msg.to_string() };
    match tok {
        Token::Plain(0) => Err(bad("letters start at 1")),
        Token::Plain(v) => Ok(Entry::unprimed(*v)),
        Token::Text(s) => {
            let digits = s.strip_suffix('\'').ok_or_else(|| bad("string entries must be primed, like \"2'\""))?;
            match digits.parse::<u32>() {
                Ok(v) if v > 0 => Ok(Entry::primed(v)),
                _ => Err(bad("expected a positive integer before the prime")),
            }
        }
    }
}

impl TryFrom<TableauJson> for SetTableau {
    type Error = TableauError;

    fn try_from(j: TableauJson) -> Result<Self, Self::Error> {
        let shape = StrictPartition::new(j.shape)?;
        if j.rows.len() != shape.len() {
            return Err(TableauError::RowCount { expected: shape.len(), found: j.rows.len() });
        }
        let mut cells = Vec::with_capacity(shape.size());
        for (r, (row, &len)) in j.rows.iter().zip(shape.parts()).enumerate() {
            if row.len() != len as usize {
                return Err(TableauError::RowLength { row: r + 1, expected: len as usize, found: row.len() });
            }
            for (c, cell) in row.iter().enumerate() {
                let entries = cell
                    .iter()
                    .enumerate()
                    .map(|(k, tok)| token_entry(tok, || format!("rows[{r}][{c}][{k}]")))
                    .collect::<Result<Vec<_>, _>>()?;
                cells.push(entries);
            }
        }
        SetTableau::new(shape, cells, j.multiset)
    }
}

impl SetTableau {
    /// Compact JSON: `{"shape":[..],"multiset":false,"rows":[..]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tableau serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, TableauError> {
        let raw: TableauJson = serde_json::from_str(text).map_err(|e| TableauError::Parse {
            position: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        SetTableau::try_from(raw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_format() {
        let t = SetTableau::from_compact("[3|13|123]/[1|2]").unwrap();
        assert_eq!(
            t.to_json(),
            r#"{"shape":[3,2],"multiset":false,"rows":[[[3],[1,3],[1,2,3]],[[1],[2]]]}"#
        );
        assert_eq!(SetTableau::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn primed_tokens() {
        let t = SetTableau::from_compact("[1|2'2]").unwrap();
        assert_eq!(t.to_json(), r#"{"shape":[2],"multiset":false,"rows":[[[1],["2'",2]]]}"#);
        assert_eq!(SetTableau::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = SetTableau::from_json(r#"{"shape":[2],"rows":[[[1],["x"]]]}"#).unwrap_err();
        assert!(matches!(err, TableauError::Parse { ref position, .. } if position == "rows[0][1][0]"));
        let err = SetTableau::from_json("{\"shape\":[2],\n\"rows\": [[[1],[2]]").unwrap_err();
        assert!(matches!(err, TableauError::Parse { ref position, .. } if position.starts_with("line 2")));
        let err = SetTableau::from_json(r#"{"shape":[2],"rows":[[[1]]]}"#).unwrap_err();
        assert!(matches!(err, TableauError::RowLength { row: 1, expected: 2, found: 1 }));
        assert!(SetTableau::from_json(r#"{"shape":[1],"rows":[[[]]]}"#).is_err());
        assert!(SetTableau::from_json(r#"{"shape":[2,2],"rows":[]}"#).is_err());
        assert!(SetTableau::from_json(r#"{"shape":[1],"rows":[[[0]]]}"#).is_err());
    }
}
