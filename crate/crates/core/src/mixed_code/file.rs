use serde::{Deserialize, Serialize};

use crate::mixed_code::{GeneratorMatrix, Shape};
use crate::{Error, Prime, Result};

/// The on-disk code description: `{"p", "alpha", "beta", "rows"}`.
///
/// Rows hold `alpha + beta` integers; rows of order `p` and `p²` may be
/// interleaved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeFile {
    pub p: u32,
    pub alpha: usize,
    pub beta: usize,
    pub rows: Vec<Vec<u32>>,
}

impl CodeFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
    }

    pub fn from_matrix(g: &GeneratorMatrix) -> Self {
        let shape = g.shape();
        CodeFile {
            p: shape.p.get(),
            alpha: shape.alpha,
            beta: shape.beta,
            rows: g.to_rows(),
        }
    }

    /// Validates the contents and classifies the rows.
    pub fn to_matrix(&self) -> Result<GeneratorMatrix> {
        let p = Prime::new(self.p)?;
        if self.alpha + self.beta == 0 {
            return Err(Error::Malformed("alpha + beta must be positive".into()));
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.len() != self.alpha + self.beta {
                return Err(Error::Malformed(format!(
                    "row {i} has {} entries, expected {}",
                    row.len(),
                    self.alpha + self.beta
                )));
            }
        }
        GeneratorMatrix::from_rows(p, self.alpha, self.beta, &self.rows)
    }

    pub fn shape(&self) -> Result<Shape> {
        Ok(Shape::new(Prime::new(self.p)?, self.alpha, self.beta))
    }

    /// Deterministic JSON with one row per line.
    pub fn to_json(&self) -> String {
        let mut out = format!(
            "{{\n  \"p\": {},\n  \"alpha\": {},\n  \"beta\": {},\n  \"rows\": [",
            self.p, self.alpha, self.beta
        );
        for (i, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            out.push_str(if i == 0 { "\n    [" } else { ",\n    [" });
            out.push_str(&cells.join(", "));
            out.push(']');
        }
        if !self.rows.is_empty() {
            out.push_str("\n  ");
        }
        out.push_str("]\n}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let f = CodeFile {
            p: 3,
            alpha: 1,
            beta: 2,
            rows: vec![vec![1, 3, 0], vec![0, 1, 8]],
        };
        let text = f.to_json();
        assert_eq!(
            text,
            "{\n  \"p\": 3,\n  \"alpha\": 1,\n  \"beta\": 2,\n  \"rows\": [\n    [1, 3, 0],\n    [0, 1, 8]\n  ]\n}\n"
        );
        assert_eq!(CodeFile::parse(&text).unwrap(), f);
        let g = f.to_matrix().unwrap();
        assert_eq!(g.code_type().to_string(), "(1,2;1,1;1)");
        assert_eq!(CodeFile::from_matrix(&g), f);
    }

    #[test]
    fn empty_rows_serialize() {
        let f = CodeFile {
            p: 5,
            alpha: 0,
            beta: 1,
            rows: vec![],
        };
        assert_eq!(CodeFile::parse(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            CodeFile::parse("{\"p\":3}"),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            CodeFile::parse("{\"p\":3,\"alpha\":0,\"beta\":1,\"rows\":[],\"x\":1}"),
            Err(Error::Malformed(_))
        ));
        let f = CodeFile::parse("{\"p\":3,\"alpha\":1,\"beta\":1,\"rows\":[[3,0]]}").unwrap();
        assert!(matches!(f.to_matrix(), Err(Error::EntryOutOfRange { .. })));
        let f = CodeFile::parse("{\"p\":3,\"alpha\":1,\"beta\":1,\"rows\":[[1]]}").unwrap();
        assert!(matches!(f.to_matrix(), Err(Error::Malformed(_))));
        let f = CodeFile::parse("{\"p\":4,\"alpha\":1,\"beta\":1,\"rows\":[[1,0]]}").unwrap();
        assert!(matches!(f.to_matrix(), Err(Error::NotPrime(4))));
        let f = CodeFile::parse("{\"p\":3,\"alpha\":0,\"beta\":1,\"rows\":[[1],[2]]}").unwrap();
        assert!(matches!(f.to_matrix(), Err(Error::InvalidGenerators(_))));
    }
}
