//! The instance file format: a self-describing JSON document holding the
//! rosters, affiliations, and both preference structures, with an optional
//! generator provenance block.
//!
//! Serialization is canonical — keys in declaration order, agents in roster
//! order, preferences best-first — so equal markets produce byte-identical
//! documents and `parse(serialize(m)) == m`.

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::generator::{AffiliationPattern, GeneratorSpec, ProfileStrategy};
use crate::market::{validate_market, Market, RawMarket, ValidationError};

/// Format marker carried by every instance document.
pub const FORMAT: &str = "affmatch-instance";
/// Current document version.
pub const VERSION: u64 = 1;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid document at {location}: {message}")]
    Document { location: String, message: String },
    #[error(transparent)]
    Invalid(#[from] ValidationError),
}

fn doc_error(location: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError::Document {
        location: location.into(),
        message: message.into(),
    }
}

/// Serializes a market (and optional generator provenance) into the
/// canonical document.
pub fn serialize_market(market: &Market, generator: Option<&GeneratorSpec>) -> String {
    let applicants: Vec<Value> = market
        .applicants()
        .map(|a| Value::String(market.applicant_label(a).to_string()))
        .collect();
    let employers: Vec<Value> = market
        .employers()
        .map(|e| Value::String(market.employer_label(e).to_string()))
        .collect();

    let mut affiliations = Map::new();
    for e in market.employers() {
        let list: Vec<Value> = market
            .affiliates(e)
            .iter()
            .map(|&a| Value::String(market.applicant_label(a).to_string()))
            .collect();
        affiliations.insert(market.employer_label(e).to_string(), Value::Array(list));
    }

    let mut applicant_prefs = Map::new();
    for a in market.applicants() {
        let order: Vec<Value> = market
            .applicant_order(a)
            .as_slice()
            .iter()
            .map(|&e| Value::String(market.employer_label(e).to_string()))
            .collect();
        applicant_prefs.insert(market.applicant_label(a).to_string(), Value::Array(order));
    }

    let mut employer_prefs = Map::new();
    for e in market.employers() {
        let tuples: Vec<Value> = market
            .profile(e)
            .tuples()
            .iter()
            .map(|t| {
                let mut entry = vec![Value::String(market.applicant_label(t.hire).to_string())];
                entry.extend(
                    t.placements
                        .iter()
                        .map(|&p| Value::String(market.employer_label(p).to_string())),
                );
                Value::Array(entry)
            })
            .collect();
        employer_prefs.insert(market.employer_label(e).to_string(), Value::Array(tuples));
    }

    let mut doc = Map::new();
    doc.insert("format".into(), Value::String(FORMAT.into()));
    doc.insert("version".into(), json!(VERSION));
    doc.insert("applicants".into(), Value::Array(applicants));
    doc.insert("employers".into(), Value::Array(employers));
    doc.insert("affiliations".into(), Value::Object(affiliations));
    doc.insert("applicant_prefs".into(), Value::Object(applicant_prefs));
    doc.insert("employer_prefs".into(), Value::Object(employer_prefs));
    if let Some(spec) = generator {
        doc.insert("generator".into(), generator_block(spec));
    }
    let mut text = serde_json::to_string_pretty(&Value::Object(doc))
        .expect("instance documents always serialize");
    text.push('\n');
    text
}

fn generator_block(spec: &GeneratorSpec) -> Value {
    let mut block = Map::new();
    block.insert("seed".into(), json!(spec.seed));
    block.insert("n".into(), json!(spec.n));
    match spec.affiliation {
        AffiliationPattern::Bijection => {
            block.insert("affiliation".into(), Value::String("bijection".into()));
        }
        AffiliationPattern::RandomPartial { density } => {
            block.insert("affiliation".into(), Value::String("random_partial".into()));
            block.insert("density".into(), json!(density));
        }
    }
    match spec.strategy {
        ProfileStrategy::CandidateFirst => {
            block.insert("strategy".into(), Value::String("candidate_first".into()));
        }
        ProfileStrategy::AffiliateFirst => {
            block.insert("strategy".into(), Value::String("affiliate_first".into()));
        }
        ProfileStrategy::Weighted { lambda } => {
            block.insert("strategy".into(), Value::String("weighted".into()));
            block.insert("lambda".into(), json!(lambda));
        }
        ProfileStrategy::UniformRandom => {
            block.insert("strategy".into(), Value::String("uniform_random".into()));
        }
    }
    Value::Object(block)
}

/// Parses and validates an instance document. Returns the market and any
/// generator provenance it carries.
pub fn parse_market(text: &str) -> Result<(Market, Option<GeneratorSpec>), ParseError> {
    let value: Value = serde_json::from_str(text).map_err(|err| ParseError::Syntax {
        line: err.line(),
        column: err.column(),
        message: err.to_string(),
    })?;
    let doc = value
        .as_object()
        .ok_or_else(|| doc_error("$", "expected a JSON object"))?;

    for key in doc.keys() {
        if !matches!(
            key.as_str(),
            "format"
                | "version"
                | "applicants"
                | "employers"
                | "affiliations"
                | "applicant_prefs"
                | "employer_prefs"
                | "generator"
        ) {
            return Err(doc_error(key, "unknown field"));
        }
    }
    if let Some(format) = doc.get("format") {
        if format.as_str() != Some(FORMAT) {
            return Err(doc_error("format", format!("expected \"{FORMAT}\"")));
        }
    }
    match doc.get("version") {
        Some(v) if v.as_u64() == Some(VERSION) => {}
        Some(v) => return Err(doc_error("version", format!("unsupported version {v}"))),
        None => return Err(doc_error("version", "missing")),
    }

    let applicants = string_array(doc, "applicants")?;
    let employers = string_array(doc, "employers")?;

    let mut affiliations = Vec::new();
    if let Some(value) = doc.get("affiliations") {
        let map = value
            .as_object()
            .ok_or_else(|| doc_error("affiliations", "expected an object"))?;
        for (employer, list) in map {
            let location = format!("affiliations.{employer}");
            let list = list
                .as_array()
                .ok_or_else(|| doc_error(&location, "expected an array"))?;
            let mut resolved = Vec::with_capacity(list.len());
            for entry in list {
                resolved.push(string_entry(entry, &location)?);
            }
            affiliations.push((employer.clone(), resolved));
        }
    }

    let prefs_value = doc
        .get("applicant_prefs")
        .ok_or_else(|| doc_error("applicant_prefs", "missing"))?;
    let prefs_map = prefs_value
        .as_object()
        .ok_or_else(|| doc_error("applicant_prefs", "expected an object"))?;
    let mut applicant_prefs = Vec::new();
    for (applicant, order) in prefs_map {
        let location = format!("applicant_prefs.{applicant}");
        let order = order
            .as_array()
            .ok_or_else(|| doc_error(&location, "expected an array"))?;
        let mut resolved = Vec::with_capacity(order.len());
        for entry in order {
            resolved.push(string_entry(entry, &location)?);
        }
        applicant_prefs.push((applicant.clone(), resolved));
    }

    let prefs_value = doc
        .get("employer_prefs")
        .ok_or_else(|| doc_error("employer_prefs", "missing"))?;
    let prefs_map = prefs_value
        .as_object()
        .ok_or_else(|| doc_error("employer_prefs", "expected an object"))?;
    let mut employer_prefs = Vec::new();
    for (employer, tuples) in prefs_map {
        let location = format!("employer_prefs.{employer}");
        let tuples = tuples
            .as_array()
            .ok_or_else(|| doc_error(&location, "expected an array of tuples"))?;
        let mut resolved = Vec::with_capacity(tuples.len());
        for (i, tuple) in tuples.iter().enumerate() {
            let location = format!("{location}[{i}]");
            let tuple = tuple
                .as_array()
                .ok_or_else(|| doc_error(&location, "expected a [hire, placements..] array"))?;
            let mut entry = Vec::with_capacity(tuple.len());
            for part in tuple {
                entry.push(string_entry(part, &location)?);
            }
            resolved.push(entry);
        }
        employer_prefs.push((employer.clone(), resolved));
    }

    let generator = doc.get("generator").map(parse_generator).transpose()?;

    let raw = RawMarket {
        applicants,
        employers,
        affiliations,
        applicant_prefs,
        employer_prefs,
    };
    let market = validate_market(&raw)?;
    Ok((market, generator))
}

fn string_array(doc: &Map<String, Value>, key: &str) -> Result<Vec<String>, ParseError> {
    let value = doc.get(key).ok_or_else(|| doc_error(key, "missing"))?;
    let array = value
        .as_array()
        .ok_or_else(|| doc_error(key, "expected an array of strings"))?;
    array.iter().map(|entry| string_entry(entry, key)).collect()
}

fn string_entry(value: &Value, location: &str) -> Result<String, ParseError> {
    value
        .as_str()
        .map(str::to_string)
        .ok_or_else(|| doc_error(location, format!("expected a string, found {value}")))
}

fn parse_generator(value: &Value) -> Result<GeneratorSpec, ParseError> {
    let block = value
        .as_object()
        .ok_or_else(|| doc_error("generator", "expected an object"))?;
    let seed = block
        .get("seed")
        .and_then(Value::as_u64)
        .ok_or_else(|| doc_error("generator.seed", "expected an unsigned integer"))?;
    let n = block
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| doc_error("generator.n", "expected an unsigned integer"))?
        as usize;
    let affiliation = match block.get("affiliation").and_then(Value::as_str) {
        Some("bijection") | None => AffiliationPattern::Bijection,
        Some("random_partial") => {
            let density = block
                .get("density")
                .and_then(Value::as_f64)
                .ok_or_else(|| doc_error("generator.density", "expected a number"))?;
            AffiliationPattern::RandomPartial { density }
        }
        Some(other) => {
            return Err(doc_error(
                "generator.affiliation",
                format!("unknown pattern `{other}`"),
            ))
        }
    };
    let strategy = match block.get("strategy").and_then(Value::as_str) {
        Some("candidate_first") => ProfileStrategy::CandidateFirst,
        Some("affiliate_first") => ProfileStrategy::AffiliateFirst,
        Some("uniform_random") => ProfileStrategy::UniformRandom,
        Some("weighted") => {
            let lambda = block
                .get("lambda")
                .and_then(Value::as_f64)
                .ok_or_else(|| doc_error("generator.lambda", "expected a number"))?;
            ProfileStrategy::Weighted { lambda }
        }
        Some(other) => {
            return Err(doc_error(
                "generator.strategy",
                format!("unknown strategy `{other}`"),
            ))
        }
        None => return Err(doc_error("generator.strategy", "missing")),
    };
    Ok(GeneratorSpec {
        seed,
        n,
        affiliation,
        strategy,
    })
}
