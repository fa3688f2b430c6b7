//! Record tables, the value partition they induce, uniform re-identification
//! probabilities, and the exact probability formula built on the
//! Littlewood-Richardson coefficient.
//!
//! A table's entries are opaque comparable values; grouping equal entries by
//! their row-major position yields a set partition. Re-identification takes
//! a tuple of target values over a column subset and spreads probability
//! uniformly over the rows matching it: 1/|J| on each matching row, 0 on
//! the complement, all exact rationals.
//!
//! The closing formula is P = c / (3·2^(n+2)), where c is the
//! Littlewood-Richardson coefficient of the three partitions and n the box
//! string length. Its constants are exposed in a breakdown record: the 2^n
//! strings encoding partitions in a bounding box, and the order-12 symmetry
//! group folding them, with 2^n · 12 = 3·2^(n+2).

use std::collections::BTreeSet;
use std::fmt;

use num::{BigInt, BigRational, BigUint, One, Zero};

use crate::partition::{Partition, SetPartition};
use crate::tableaux::lr_coefficient;

/// Errors from table loading and linkage queries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinkageError {
    /// The CSV had no rows at all.
    EmptyTable,
    /// The CSV reader rejected the input (ragged rows, bad quoting, ...).
    BadCsv(String),
    /// Two rows carry the same index.
    DuplicateIndex(String),
    /// Two columns carry the same name.
    DuplicateColumn(String),
    /// A queried column does not exist.
    UnknownColumn(String),
    /// The target tuple length must equal the column subset size.
    ValueCountMismatch { expected: usize, got: usize },
}

impl fmt::Display for LinkageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinkageError::EmptyTable => write!(f, "table has no rows"),
            LinkageError::BadCsv(msg) => write!(f, "cannot read table: {msg}"),
            LinkageError::DuplicateIndex(i) => write!(f, "duplicate row index '{i}'"),
            LinkageError::DuplicateColumn(c) => write!(f, "duplicate column '{c}'"),
            LinkageError::UnknownColumn(c) => write!(f, "no column named '{c}'"),
            LinkageError::ValueCountMismatch { expected, got } => {
                write!(f, "expected {expected} values, got {got}")
            }
        }
    }
}

impl std::error::Error for LinkageError {}

/// A rectangular table of opaque values with unique row indices and named
/// columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DataTable {
    index_name: String,
    columns: Vec<String>,
    index: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl DataTable {
    pub fn new(
        index_name: String,
        columns: Vec<String>,
        index: Vec<String>,
        rows: Vec<Vec<String>>,
    ) -> Result<DataTable, LinkageError> {
        let mut seen = BTreeSet::new();
        for c in &columns {
            if !seen.insert(c.clone()) {
                return Err(LinkageError::DuplicateColumn(c.clone()));
            }
        }
        let mut seen = BTreeSet::new();
        for i in &index {
            if !seen.insert(i.clone()) {
                return Err(LinkageError::DuplicateIndex(i.clone()));
            }
        }
        debug_assert_eq!(index.len(), rows.len());
        for row in &rows {
            if row.len() != columns.len() {
                return Err(LinkageError::BadCsv(format!(
                    "row with {} entries in a {}-column table",
                    row.len(),
                    columns.len()
                )));
            }
        }
        Ok(DataTable { index_name, columns, index, rows })
    }

    /// Loads CSV text: the first row names the columns (its first cell names
    /// the index), each following row starts with its index.
    pub fn parse_csv(text: &str) -> Result<DataTable, LinkageError> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let mut records = reader.records();
        let header = match records.next() {
            Some(Ok(rec)) => rec,
            Some(Err(e)) => return Err(LinkageError::BadCsv(e.to_string())),
            None => return Err(LinkageError::EmptyTable),
        };
        let mut cells = header.iter().map(str::to_string);
        let index_name = cells.next().ok_or(LinkageError::EmptyTable)?;
        let columns: Vec<String> = cells.collect();
        let mut index = Vec::new();
        let mut rows = Vec::new();
        for record in records {
            let record = record.map_err(|e| LinkageError::BadCsv(e.to_string()))?;
            let mut cells = record.iter().map(str::to_string);
            index.push(cells.next().expect("csv records are nonempty"));
            rows.push(cells.collect());
        }
        if rows.is_empty() {
            return Err(LinkageError::EmptyTable);
        }
        DataTable::new(index_name, columns, index, rows)
    }

    pub fn index_name(&self) -> &str {
        &self.index_name
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn index(&self) -> &[String] {
        &self.index
    }

    pub fn rows(&self) -> &[Vec<String>] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }
}

/// The partition of entry positions (row-major, 1-based) grouped by equal
/// value.
pub fn table_partition(table: &DataTable) -> Result<SetPartition, LinkageError> {
    let total = table.row_count() * table.columns.len();
    if total == 0 {
        return Err(LinkageError::EmptyTable);
    }
    let mut groups: Vec<(&str, Vec<usize>)> = Vec::new();
    let mut pos = 0;
    for row in &table.rows {
        for value in row {
            pos += 1;
            match groups.iter_mut().find(|(v, _)| v == value) {
                Some((_, block)) => block.push(pos),
                None => groups.push((value, vec![pos])),
            }
        }
    }
    let blocks = groups.into_iter().map(|(_, b)| b).collect();
    Ok(SetPartition::new(total, blocks).expect("positions partition cleanly"))
}

/// Per-row linkage probabilities for one target tuple: 1/|J| on the
/// matching rows J, zero elsewhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkageResult {
    /// (row index, probability) in table row order.
    probabilities: Vec<(String, BigRational)>,
    /// Indices of the matching rows, in table row order.
    linked: Vec<String>,
    /// True when no row matched; all probabilities are then zero.
    empty_match: bool,
}

impl LinkageResult {
    pub fn probabilities(&self) -> &[(String, BigRational)] {
        &self.probabilities
    }

    pub fn linked(&self) -> &[String] {
        &self.linked
    }

    pub fn is_empty_match(&self) -> bool {
        self.empty_match
    }

    pub fn probability_of(&self, index: &str) -> Option<&BigRational> {
        self.probabilities.iter().find(|(i, _)| i == index).map(|(_, p)| p)
    }
}

/// Matches `values` against the projection of each row onto `columns` and
/// spreads probability uniformly over the matching rows.
pub fn uniform_reidentification(
    table: &DataTable,
    columns: &[String],
    values: &[String],
) -> Result<LinkageResult, LinkageError> {
    let col_indices: Vec<usize> = columns
        .iter()
        .map(|c| {
            table
                .columns
                .iter()
                .position(|t| t == c)
                .ok_or_else(|| LinkageError::UnknownColumn(c.clone()))
        })
        .collect::<Result<_, _>>()?;
    if values.len() != col_indices.len() {
        return Err(LinkageError::ValueCountMismatch {
            expected: col_indices.len(),
            got: values.len(),
        });
    }
    let matches: Vec<bool> = table
        .rows
        .iter()
        .map(|row| col_indices.iter().zip(values).all(|(&c, v)| &row[c] == v))
        .collect();
    let linked: Vec<String> = table
        .index
        .iter()
        .zip(&matches)
        .filter(|(_, &m)| m)
        .map(|(i, _)| i.clone())
        .collect();
    let share = if linked.is_empty() {
        BigRational::zero()
    } else {
        BigRational::new(BigInt::one(), BigInt::from(linked.len()))
    };
    let probabilities = table
        .index
        .iter()
        .zip(&matches)
        .map(|(i, &m)| (i.clone(), if m { share.clone() } else { BigRational::zero() }))
        .collect();
    Ok(LinkageResult { probabilities, empty_match: linked.is_empty(), linked })
}

/// The probability formula and the constants it is assembled from. The
/// denominator factors as (number of box strings) × (symmetry order):
/// 2^n · 12 = 3·2^(n+2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornProbability {
    /// c / (3·2^(n+2)), reduced.
    pub probability: BigRational,
    /// The Littlewood-Richardson coefficient c of (outer, inner, content).
    pub coefficient: u64,
    /// 2^n strings encode the partitions fitting an n-box bounding frame.
    pub box_strings: BigUint,
    /// The order of the symmetry group folded out of the string count.
    pub symmetry_order: u32,
    /// 3·2^(n+2).
    pub denominator: BigUint,
}

/// Evaluates P = c / (3·2^(n+2)) for the outer shape γ and inner pair
/// (λ, μ), with n ≥ 1 the box string length — an independent parameter,
/// not derived from γ.
pub fn horn_probability(gamma: &Partition, lambda: &Partition, mu: &Partition, n: u32) -> HornProbability {
    assert!(n >= 1, "the box string length must be at least 1");
    let coefficient = lr_coefficient(gamma, lambda, mu);
    let box_strings = BigUint::one() << n;
    let symmetry_order = 12u32;
    let denominator = &box_strings * BigUint::from(symmetry_order);
    debug_assert_eq!(denominator, BigUint::from(3u32) << (n + 2));
    let probability = BigRational::new(
        BigInt::from(coefficient),
        BigInt::from(denominator.clone()),
    );
    HornProbability { probability, coefficient, box_strings, symmetry_order, denominator }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{index_below, seeded};

    fn table(csv: &str) -> DataTable {
        DataTable::parse_csv(csv).unwrap()
    }

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn csv_loading() {
        let t = table("id,name,city\n1,ann,oslo\n2,bob,rome\n");
        assert_eq!(t.index_name(), "id");
        assert_eq!(t.columns(), ["name", "city"]);
        assert_eq!(t.index(), ["1", "2"]);
        assert_eq!(t.rows()[1], ["bob", "rome"]);

        assert_eq!(DataTable::parse_csv("").unwrap_err(), LinkageError::EmptyTable);
        assert_eq!(
            DataTable::parse_csv("id,a\n").unwrap_err(),
            LinkageError::EmptyTable
        );
        assert_eq!(
            DataTable::parse_csv("id,a\n1,x\n1,y\n").unwrap_err(),
            LinkageError::DuplicateIndex("1".into())
        );
        assert_eq!(
            DataTable::parse_csv("id,a,a\n1,x,y\n").unwrap_err(),
            LinkageError::DuplicateColumn("a".into())
        );
        assert!(matches!(
            DataTable::parse_csv("id,a,b\n1,x\n"),
            Err(LinkageError::BadCsv(_))
        ));
    }

    #[test]
    fn value_partitions() {
        let t = table("id,v\nr1,x\nr2,x\n");
        assert_eq!(table_partition(&t).unwrap().to_string(), "{1,2}");

        let t = table("id,v\nr1,x\nr2,y\n");
        assert_eq!(table_partition(&t).unwrap().to_string(), "{1|2}");

        let t = table("id,c1,c2\nr1,x,y\nr2,y,x\n");
        assert_eq!(table_partition(&t).unwrap().to_string(), "{1,4|2,3}");
    }

    #[test]
    fn reidentification_examples() {
        let t = table("id,name,city\n1,ann,oslo\n2,bob,rome\n3,ann,rome\n");
        let cols = |names: &[&str]| -> Vec<String> {
            names.iter().map(|s| s.to_string()).collect()
        };

        // Unique match.
        let r = uniform_reidentification(&t, &cols(&["name", "city"]), &cols(&["bob", "rome"]))
            .unwrap();
        assert_eq!(r.linked(), ["2"]);
        assert_eq!(r.probability_of("2"), Some(&BigRational::one()));
        assert_eq!(r.probability_of("1"), Some(&BigRational::zero()));
        assert!(!r.is_empty_match());

        // Two matches share 1/2 each.
        let r = uniform_reidentification(&t, &cols(&["name"]), &cols(&["ann"])).unwrap();
        assert_eq!(r.linked(), ["1", "3"]);
        assert_eq!(r.probability_of("1"), Some(&rat(1, 2)));
        assert_eq!(r.probability_of("3"), Some(&rat(1, 2)));
        assert_eq!(r.probability_of("2"), Some(&BigRational::zero()));

        // No match: all zero, flagged.
        let r = uniform_reidentification(&t, &cols(&["city"]), &cols(&["paris"])).unwrap();
        assert!(r.is_empty_match());
        assert!(r.linked().is_empty());
        assert!(r.probabilities().iter().all(|(_, p)| p.is_zero()));

        assert_eq!(
            uniform_reidentification(&t, &cols(&["height"]), &cols(&["tall"])).unwrap_err(),
            LinkageError::UnknownColumn("height".into())
        );
        assert_eq!(
            uniform_reidentification(&t, &cols(&["name", "city"]), &cols(&["ann"])).unwrap_err(),
            LinkageError::ValueCountMismatch { expected: 2, got: 1 }
        );
    }

    #[test]
    fn reidentification_sums_and_shares() {
        let mut rng = seeded(17);
        let values = ["u", "v", "w"];
        for _ in 0..50 {
            let rows = 1 + index_below(&mut rng, 8);
            let cols = 1 + index_below(&mut rng, 3);
            let header = std::iter::once("id".to_string())
                .chain((0..cols).map(|c| format!("c{c}")))
                .collect::<Vec<_>>()
                .join(",");
            let mut csv = header + "\n";
            for r in 0..rows {
                let mut line = format!("r{r}");
                for _ in 0..cols {
                    line.push(',');
                    line.push_str(values[index_below(&mut rng, values.len())]);
                }
                csv.push_str(&line);
                csv.push('\n');
            }
            let t = table(&csv);
            let target: Vec<String> = (0..cols)
                .map(|_| values[index_below(&mut rng, values.len())].to_string())
                .collect();
            let names: Vec<String> = (0..cols).map(|c| format!("c{c}")).collect();
            let r = uniform_reidentification(&t, &names, &target).unwrap();

            let total: BigRational = r.probabilities().iter().map(|(_, p)| p.clone()).sum();
            if r.is_empty_match() {
                assert!(total.is_zero());
            } else {
                assert!(total.is_one());
                let share = rat(1, r.linked().len() as i64);
                for (_, p) in r.probabilities() {
                    assert!(p.is_zero() || *p == share);
                }
            }
        }
    }

    #[test]
    fn probability_formula_examples() {
        let p = |s: &str| Partition::parse(s).unwrap();
        let empty = Partition::parse("0").unwrap();

        // Outer equal to one inner, the other empty: coefficient 1.
        let h = horn_probability(&p("2,1"), &p("2,1"), &empty, 2);
        assert_eq!(h.coefficient, 1);
        assert_eq!(h.probability, rat(1, 48));
        assert_eq!(h.box_strings, BigUint::from(4u32));
        assert_eq!(h.symmetry_order, 12);
        assert_eq!(h.denominator, BigUint::from(48u32));

        let h = horn_probability(&p("3,2,1"), &p("2,1"), &p("2,1"), 3);
        assert_eq!(h.coefficient, 2);
        assert_eq!(h.probability, rat(2, 96));
        assert_eq!(h.probability, rat(1, 48));

        // Weight mismatch: zero coefficient, zero probability.
        let h = horn_probability(&p("3"), &p("2,1"), &p("2,1"), 2);
        assert_eq!(h.coefficient, 0);
        assert!(h.probability.is_zero());
    }

    #[test]
    fn probability_formula_properties() {
        let p = |s: &str| Partition::parse(s).unwrap();
        let cases = [
            ("3,2,1", "2,1", "2,1", 3u32),
            ("2,2", "2", "2", 2),
            ("4,2", "2,1", "2,1", 4),
            ("2,1", "1,1", "1", 1),
        ];
        for (g, l, m, n) in cases {
            let h = horn_probability(&p(g), &p(l), &p(m), n);
            let swapped = horn_probability(&p(g), &p(m), &p(l), n);
            assert_eq!(h.probability, swapped.probability, "symmetry for {g}/{l}/{m}");
            assert!(h.probability >= BigRational::zero());
            assert_eq!(h.probability > BigRational::zero(), h.coefficient > 0);
            assert_eq!(
                &h.box_strings * BigUint::from(h.symmetry_order),
                h.denominator
            );
        }
    }
}
