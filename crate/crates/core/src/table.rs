//! Decision tables: the universe of objects, their condition attributes and
//! the decision column that selects target sets.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Identifier of one object (row) of the universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ObjectId(pub u64);

impl fmt::Display for ObjectId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u64> for ObjectId {
    fn from(id: u64) -> Self {
        ObjectId(id)
    }
}

/// A set of objects, kept in ascending id order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ObjectSet(BTreeSet<ObjectId>);

impl ObjectSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_ids<I: IntoIterator<Item = u64>>(ids: I) -> Self {
        ids.into_iter().map(ObjectId).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, id: ObjectId) -> bool {
        self.0.contains(&id)
    }

    pub fn insert(&mut self, id: ObjectId) -> bool {
        self.0.insert(id)
    }

    pub fn iter(&self) -> impl Iterator<Item = ObjectId> + '_ {
        self.0.iter().copied()
    }

    pub fn ids(&self) -> Vec<u64> {
        self.0.iter().map(|id| id.0).collect()
    }

    pub fn is_subset(&self, other: &ObjectSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &ObjectSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &ObjectSet) -> ObjectSet {
        ObjectSet(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &ObjectSet) -> ObjectSet {
        ObjectSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &ObjectSet) -> ObjectSet {
        ObjectSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn symmetric_difference(&self, other: &ObjectSet) -> ObjectSet {
        ObjectSet(self.0.symmetric_difference(&other.0).copied().collect())
    }
}

impl FromIterator<ObjectId> for ObjectSet {
    fn from_iter<I: IntoIterator<Item = ObjectId>>(iter: I) -> Self {
        ObjectSet(iter.into_iter().collect())
    }
}

impl Extend<ObjectId> for ObjectSet {
    fn extend<I: IntoIterator<Item = ObjectId>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl<'a> IntoIterator for &'a ObjectSet {
    type Item = ObjectId;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, ObjectId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Display for ObjectSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, id) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{id}")?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColumnKind {
    Numeric,
    DiscreteLabel,
    Categorical,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ColumnValues {
    Numeric(Vec<f64>),
    Label(Vec<u32>),
    Categorical(Vec<String>),
}

impl ColumnValues {
    pub fn len(&self) -> usize {
        match self {
            ColumnValues::Numeric(v) => v.len(),
            ColumnValues::Label(v) => v.len(),
            ColumnValues::Categorical(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// One condition attribute.
#[derive(Clone, Debug, PartialEq)]
pub struct AttributeColumn {
    name: String,
    values: ColumnValues,
}

impl AttributeColumn {
    pub fn numeric(name: impl Into<String>, values: Vec<f64>) -> Self {
        Self { name: name.into(), values: ColumnValues::Numeric(values) }
    }

    pub fn labels(name: impl Into<String>, values: Vec<u32>) -> Self {
        Self { name: name.into(), values: ColumnValues::Label(values) }
    }

    pub fn categorical<S: Into<String>>(name: impl Into<String>, values: Vec<S>) -> Self {
        Self { name: name.into(), values: ColumnValues::Categorical(values.into_iter().map(Into::into).collect()) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn values(&self) -> &ColumnValues {
        &self.values
    }

    pub fn kind(&self) -> ColumnKind {
        match self.values {
            ColumnValues::Numeric(_) => ColumnKind::Numeric,
            ColumnValues::Label(_) => ColumnKind::DiscreteLabel,
            ColumnValues::Categorical(_) => ColumnKind::Categorical,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_discrete(&self) -> bool {
        self.kind() != ColumnKind::Numeric
    }

    /// Cell text as written back to CSV.
    pub fn cell(&self, row: usize) -> String {
        match &self.values {
            ColumnValues::Numeric(v) => v[row].to_string(),
            ColumnValues::Label(v) => v[row].to_string(),
            ColumnValues::Categorical(v) => v[row].clone(),
        }
    }

    /// Dense per-row codes such that two rows share a code iff they share a value.
    ///
    /// Fails for numeric columns: indiscernibility is only defined on discrete data.
    pub fn discrete_codes(&self) -> Result<Vec<u32>> {
        match &self.values {
            ColumnValues::Label(v) => Ok(v.clone()),
            ColumnValues::Categorical(v) => {
                let mut interned: std::collections::HashMap<&str, u32> = Default::default();
                Ok(v.iter()
                    .map(|s| {
                        let next = interned.len() as u32;
                        *interned.entry(s.as_str()).or_insert(next)
                    })
                    .collect())
            }
            ColumnValues::Numeric(_) => Err(Error::UndiscretizedColumn(self.name.clone())),
        }
    }

    pub fn with_values(&self, values: ColumnValues) -> Self {
        Self { name: self.name.clone(), values }
    }
}

/// The outcome column. Raw tokens are coded 0, 1, 2, ... in lexicographic order.
#[derive(Clone, Debug, PartialEq)]
pub struct DecisionColumn {
    name: String,
    raw_values: Vec<String>,
    codes: Vec<u32>,
    code_map: BTreeMap<String, u32>,
}

impl DecisionColumn {
    pub fn new<S: Into<String>>(name: impl Into<String>, raw_values: Vec<S>) -> Self {
        let raw_values: Vec<String> = raw_values.into_iter().map(Into::into).collect();
        let code_map: BTreeMap<String, u32> = raw_values
            .iter()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(code, token)| (token, code as u32))
            .collect();
        let codes = raw_values.iter().map(|t| code_map[t]).collect();
        Self { name: name.into(), raw_values, codes, code_map }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn raw_values(&self) -> &[String] {
        &self.raw_values
    }

    pub fn codes(&self) -> &[u32] {
        &self.codes
    }

    pub fn code_map(&self) -> &BTreeMap<String, u32> {
        &self.code_map
    }

    pub fn code_of(&self, token: &str) -> Option<u32> {
        self.code_map.get(token).copied()
    }

    pub fn available_codes(&self) -> Vec<u32> {
        self.code_map.values().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.raw_values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.raw_values.is_empty()
    }
}

/// Objects, condition attributes and one decision column.
#[derive(Clone, Debug, PartialEq)]
pub struct DecisionTable {
    id_column: Option<String>,
    object_ids: Vec<ObjectId>,
    columns: Vec<AttributeColumn>,
    decision: DecisionColumn,
}

impl DecisionTable {
    /// Builds a table, checking ids, column lengths, names and value domains.
    ///
    /// `id_column` is only the header used when writing ids back out; `None`
    /// means the ids were synthesized and are not part of the file.
    pub fn new(
        id_column: Option<String>,
        object_ids: Vec<ObjectId>,
        columns: Vec<AttributeColumn>,
        decision: DecisionColumn,
    ) -> Result<Self> {
        if object_ids.is_empty() {
            return Err(Error::EmptyTable);
        }
        if columns.is_empty() {
            return Err(Error::NoConditionAttributes);
        }
        let mut seen = HashSet::with_capacity(object_ids.len());
        for &id in &object_ids {
            if id.0 == 0 {
                return Err(Error::InvalidObjectId { line: 0, value: "0".into() });
            }
            if !seen.insert(id) {
                return Err(Error::DuplicateObjectId(id));
            }
        }

        let n = object_ids.len();
        let mut names = HashSet::new();
        if let Some(id_name) = &id_column {
            names.insert(id_name.as_str());
        }
        if !names.insert(decision.name()) {
            return Err(Error::DuplicateColumn(decision.name().to_string()));
        }
        if decision.len() != n {
            return Err(Error::ColumnLength {
                column: decision.name().to_string(),
                expected: n,
                found: decision.len(),
            });
        }
        for col in &columns {
            if !names.insert(col.name()) {
                return Err(Error::DuplicateColumn(col.name().to_string()));
            }
            if col.len() != n {
                return Err(Error::ColumnLength { column: col.name().to_string(), expected: n, found: col.len() });
            }
            match col.values() {
                ColumnValues::Numeric(v) => {
                    if let Some(i) = v.iter().position(|x| !x.is_finite()) {
                        return Err(Error::NonFiniteValue {
                            line: 0,
                            column: col.name().to_string(),
                            value: v[i].to_string(),
                        });
                    }
                }
                ColumnValues::Label(v) => {
                    if let Some(i) = v.iter().position(|&x| x < 1) {
                        return Err(Error::InvalidLabel {
                            column: col.name().to_string(),
                            object: object_ids[i],
                            value: v[i].to_string(),
                        });
                    }
                }
                ColumnValues::Categorical(_) => {}
            }
        }

        Ok(Self { id_column, object_ids, columns, decision })
    }

    pub fn id_column(&self) -> Option<&str> {
        self.id_column.as_deref()
    }

    pub fn object_ids(&self) -> &[ObjectId] {
        &self.object_ids
    }

    pub fn columns(&self) -> &[AttributeColumn] {
        &self.columns
    }

    pub fn decision(&self) -> &DecisionColumn {
        &self.decision
    }

    pub fn len(&self) -> usize {
        self.object_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.object_ids.is_empty()
    }

    pub fn universe(&self) -> ObjectSet {
        self.object_ids.iter().copied().collect()
    }

    pub fn column_names(&self) -> Vec<&str> {
        self.columns.iter().map(|c| c.name()).collect()
    }

    pub fn column_index(&self, name: &str) -> Result<usize> {
        self.columns
            .iter()
            .position(|c| c.name() == name)
            .ok_or_else(|| Error::UnknownColumn { name: name.to_string(), available: self.column_names().join(", ") })
    }

    pub fn column(&self, name: &str) -> Result<&AttributeColumn> {
        Ok(&self.columns[self.column_index(name)?])
    }

    /// True when every condition attribute is discrete-label or categorical.
    pub fn is_discrete(&self) -> bool {
        self.columns.iter().all(AttributeColumn::is_discrete)
    }

    /// Same objects and decision, new condition columns.
    pub fn with_columns(&self, columns: Vec<AttributeColumn>) -> Result<Self> {
        Self::new(self.id_column.clone(), self.object_ids.clone(), columns, self.decision.clone())
    }

    /// Keeps the named condition attributes, in table order.
    pub fn project<S: AsRef<str>>(&self, names: &[S]) -> Result<Self> {
        for n in names {
            self.column_index(n.as_ref())?;
        }
        let keep: HashSet<&str> = names.iter().map(|s| s.as_ref()).collect();
        let columns = self.columns.iter().filter(|c| keep.contains(c.name())).cloned().collect();
        self.with_columns(columns)
    }
}

/// Which columns hold object ids and decisions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IngestConfig {
    /// `None`: ids are synthesized as 1..=n in row order.
    pub id_column: Option<String>,
    /// `None`: the last column.
    pub decision_column: Option<String>,
}

impl IngestConfig {
    pub fn with_id_column(mut self, name: impl Into<String>) -> Self {
        self.id_column = Some(name.into());
        self
    }

    pub fn with_decision_column(mut self, name: impl Into<String>) -> Self {
        self.decision_column = Some(name.into());
        self
    }
}

/// Reads a CSV decision table with a header row.
///
/// Columns whose every cell parses as a finite number become numeric, all
/// others categorical. Empty cells are rejected.
pub fn load_csv<R: Read>(source: R, config: &IngestConfig) -> Result<DecisionTable> {
    let mut reader =
        csv::ReaderBuilder::new().has_headers(true).flexible(true).trim(csv::Trim::All).from_reader(source);
    let headers: Vec<String> = reader.headers()?.iter().map(str::to_string).collect();
    let width = headers.len();

    let find = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::UnknownColumn { name: name.to_string(), available: headers.join(", ") })
    };
    let id_idx = config.id_column.as_deref().map(find).transpose()?;
    let decision_idx = match config.decision_column.as_deref() {
        Some(name) => find(name)?,
        None => width.checked_sub(1).ok_or(Error::NoConditionAttributes)?,
    };
    if id_idx == Some(decision_idx) {
        return Err(Error::Config("id column and decision column must differ".into()));
    }
    let condition_idx: Vec<usize> = (0..width).filter(|&i| Some(i) != id_idx && i != decision_idx).collect();
    if condition_idx.is_empty() {
        return Err(Error::NoConditionAttributes);
    }
    {
        let mut seen = HashSet::new();
        for h in &headers {
            if !seen.insert(h.as_str()) {
                return Err(Error::DuplicateColumn(h.clone()));
            }
        }
    }

    let mut cells: Vec<Vec<String>> = vec![Vec::new(); width];
    let mut lines = Vec::new();
    for record in reader.records() {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != width {
            return Err(Error::RaggedRow { line, expected: width, found: record.len() });
        }
        for (i, cell) in record.iter().enumerate() {
            if cell.is_empty() {
                return Err(Error::MissingValue { line, column: headers[i].clone() });
            }
            cells[i].push(cell.to_string());
        }
        lines.push(line);
    }
    if lines.is_empty() {
        return Err(Error::EmptyTable);
    }

    let object_ids = match id_idx {
        Some(i) => {
            let mut ids = Vec::with_capacity(lines.len());
            let mut seen = HashSet::with_capacity(lines.len());
            for (cell, &line) in cells[i].iter().zip(&lines) {
                let id = parse_object_id(cell).ok_or_else(|| Error::InvalidObjectId { line, value: cell.clone() })?;
                if !seen.insert(id) {
                    return Err(Error::DuplicateObjectId(id));
                }
                ids.push(id);
            }
            ids
        }
        None => (1..=lines.len() as u64).map(ObjectId).collect(),
    };

    let mut columns = Vec::with_capacity(condition_idx.len());
    for &i in &condition_idx {
        columns.push(infer_column(&headers[i], std::mem::take(&mut cells[i]), &lines)?);
    }
    let decision = DecisionColumn::new(headers[decision_idx].clone(), std::mem::take(&mut cells[decision_idx]));
    DecisionTable::new(id_idx.map(|i| headers[i].clone()), object_ids, columns, decision)
}

pub fn load_csv_path(path: impl AsRef<Path>, config: &IngestConfig) -> Result<DecisionTable> {
    load_csv(std::fs::File::open(path)?, config)
}

fn parse_object_id(cell: &str) -> Option<ObjectId> {
    if let Ok(v) = cell.parse::<u64>() {
        return (v > 0).then_some(ObjectId(v));
    }
    // Spreadsheet exports often write integer ids as "12.0".
    let v: f64 = cell.parse().ok()?;
    (v.is_finite() && v >= 1.0 && v.fract() == 0.0 && v < 2f64.powi(53)).then_some(ObjectId(v as u64))
}

fn infer_column(name: &str, cells: Vec<String>, lines: &[u64]) -> Result<AttributeColumn> {
    let parsed: Option<Vec<f64>> = cells.iter().map(|c| c.parse::<f64>().ok()).collect();
    match parsed {
        Some(values) => {
            if let Some(i) = values.iter().position(|v| !v.is_finite()) {
                return Err(Error::NonFiniteValue {
                    line: lines[i],
                    column: name.to_string(),
                    value: cells[i].clone(),
                });
            }
            Ok(AttributeColumn::numeric(name, values))
        }
        None => Ok(AttributeColumn::categorical(name, cells)),
    }
}

/// Writes ids (when the table has an id column), condition columns and the
/// decision column, in that order.
pub fn write_csv<W: Write>(table: &DecisionTable, sink: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(sink);
    let mut header: Vec<&str> = Vec::with_capacity(table.columns.len() + 2);
    if let Some(id) = table.id_column() {
        header.push(id);
    }
    header.extend(table.column_names());
    header.push(table.decision.name());
    writer.write_record(&header)?;

    for row in 0..table.len() {
        let mut record: Vec<String> = Vec::with_capacity(header.len());
        if table.id_column.is_some() {
            record.push(table.object_ids[row].to_string());
        }
        record.extend(table.columns.iter().map(|c| c.cell(row)));
        record.push(table.decision.raw_values[row].clone());
        writer.write_record(&record)?;
    }
    writer.flush()?;
    Ok(())
}

/// Re-derives decision codes from the raw tokens (sorted, coded from 0).
pub fn encode_decision(table: &DecisionTable) -> DecisionTable {
    let decision = DecisionColumn::new(table.decision.name.clone(), table.decision.raw_values.clone());
    DecisionTable { decision, ..table.clone() }
}

/// Treats integer-valued numeric columns as discrete labels.
///
/// Used for tables that are already discretized on disk; categorical
/// columns are left alone, non-integral or sub-1 numbers are rejected.
pub fn as_discrete(table: &DecisionTable) -> Result<DecisionTable> {
    let mut columns = Vec::with_capacity(table.columns.len());
    for col in &table.columns {
        match col.values() {
            ColumnValues::Numeric(values) => {
                let mut labels = Vec::with_capacity(values.len());
                for (i, &v) in values.iter().enumerate() {
                    if v.fract() != 0.0 || v < 1.0 || v > u32::MAX as f64 {
                        return Err(Error::InvalidLabel {
                            column: col.name().to_string(),
                            object: table.object_ids[i],
                            value: v.to_string(),
                        });
                    }
                    labels.push(v as u32);
                }
                columns.push(col.with_values(ColumnValues::Label(labels)));
            }
            _ => columns.push(col.clone()),
        }
    }
    table.with_columns(columns)
}

/// The objects whose decision code is one of `target_codes`.
pub fn select_target_set(table: &DecisionTable, target_codes: &[u32]) -> Result<ObjectSet> {
    let available = table.decision.available_codes();
    for &code in target_codes {
        if !available.contains(&code) {
            return Err(Error::UnknownDecisionCode { code, available });
        }
    }
    Ok(table
        .object_ids
        .iter()
        .zip(&table.decision.codes)
        .filter(|(_, code)| target_codes.contains(code))
        .map(|(&id, _)| id)
        .collect())
}

/// Translates raw decision tokens to codes.
pub fn codes_for_tokens<S: AsRef<str>>(table: &DecisionTable, tokens: &[S]) -> Result<Vec<u32>> {
    let mut codes: Vec<u32> = tokens
        .iter()
        .map(|t| {
            table.decision.code_of(t.as_ref()).ok_or_else(|| Error::UnknownDecisionToken {
                token: t.as_ref().to_string(),
                available: table.decision.code_map.keys().cloned().collect(),
            })
        })
        .collect::<Result<_>>()?;
    codes.sort_unstable();
    codes.dedup();
    Ok(codes)
}
