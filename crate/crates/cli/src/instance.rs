//! Instance file schema: parsing and canonical serialization.
//!
//! An instance is a single JSON document describing a family of homothets
//! of one convex body:
//!
//! ```json
//! {
//!   "format": "nonsep-instance",
//!   "version": 1,
//!   "dimension": 2,
//!   "body": { "kind": "ball", "center": ["0", "0"], "radius": "1" },
//!   "members": [
//!     { "translation": ["-1", "0"], "scale": "1" },
//!     { "translation": ["1", "0"], "scale": "1" }
//!   ],
//!   "metadata": { "generator": "chain", "seed": "7" }
//! }
//! ```
//!
//! Every number is a **string**, either a decimal literal (`"-0.25"`) or an
//! exact fraction (`"16/11"`), so instances written by hand can state exact
//! values. Canonical serialization always emits shortest round-trip decimal
//! strings; parse ∘ serialize is the identity on canonical documents.
//!
//! Unknown fields are rejected in strict mode and collected as warnings in
//! lax mode. `metadata` is the one extension point: any string-valued keys
//! pass through untouched and are preserved by serialization.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use nonsep_core::geometry::{ConvexBody, Family, Homothet, Vector};
use serde_json::{Map, Value};

/// A parsed instance: the family plus pass-through metadata and any lax-mode
/// warnings.
#[derive(Debug)]
pub struct ParsedInstance {
    pub family: Family,
    pub metadata: BTreeMap<String, String>,
    pub warnings: Vec<String>,
}

/// A parse failure, with the JSON path that caused it.
#[derive(Debug)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

type PResult<T> = std::result::Result<T, ParseError>;

fn err<T>(msg: impl Into<String>) -> PResult<T> {
    Err(ParseError(msg.into()))
}

/// Parses an instance document. In strict mode (`lax = false`) unknown
/// fields are errors; in lax mode they become warnings.
pub fn parse_instance(text: &str, lax: bool) -> PResult<ParsedInstance> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| ParseError(format!("invalid JSON at line {}: {e}", e.line())))?;
    let mut warnings = Vec::new();

    let root = as_object(&value, "instance")?;
    expect_keys(
        root,
        "instance",
        &["format", "version", "dimension", "body", "members", "metadata"],
        lax,
        &mut warnings,
    )?;

    let format = as_str(required(root, "format", "instance")?, "instance.format")?;
    if format != "nonsep-instance" {
        return err(format!(
            "instance.format must be \"nonsep-instance\" (got \"{format}\")"
        ));
    }
    let version = required(root, "version", "instance")?;
    if version.as_u64() != Some(1) {
        return err(format!("instance.version must be 1 (got {version})"));
    }
    let dimension = required(root, "dimension", "instance")?
        .as_u64()
        .ok_or_else(|| ParseError("instance.dimension must be a positive integer".into()))?
        as usize;
    if dimension == 0 {
        return err("instance.dimension must be at least 1");
    }

    let body = parse_body(
        required(root, "body", "instance")?,
        dimension,
        lax,
        &mut warnings,
    )?;

    let members_value = required(root, "members", "instance")?;
    let members_list = members_value
        .as_array()
        .ok_or_else(|| ParseError("instance.members must be an array".into()))?;
    if members_list.is_empty() {
        return err("instance.members must not be empty");
    }
    let mut members = Vec::with_capacity(members_list.len());
    for (i, entry) in members_list.iter().enumerate() {
        let path = format!("instance.members[{i}]");
        let obj = as_object(entry, &path)?;
        expect_keys(obj, &path, &["translation", "scale"], lax, &mut warnings)?;
        let translation = parse_vector(
            required(obj, "translation", &path)?,
            &format!("{path}.translation"),
            dimension,
        )?;
        let scale = parse_number(
            required(obj, "scale", &path)?,
            &format!("{path}.scale"),
        )?;
        if !(scale > 0.0) {
            return err(format!("{path}.scale must be positive (got {scale})"));
        }
        members.push(
            Homothet::new(translation, scale)
                .map_err(|e| ParseError(format!("{path}: {e}")))?,
        );
    }

    let metadata = match root.get("metadata") {
        None => BTreeMap::new(),
        Some(v) => {
            let obj = as_object(v, "instance.metadata")?;
            let mut map = BTreeMap::new();
            for (k, entry) in obj {
                let s = entry.as_str().ok_or_else(|| {
                    ParseError(format!(
                        "instance.metadata.{k} must be a string value"
                    ))
                })?;
                map.insert(k.clone(), s.to_string());
            }
            map
        }
    };

    let family = Family::new(body, members)
        .map_err(|e| ParseError(format!("instance does not form a valid family: {e}")))?;
    Ok(ParsedInstance {
        family,
        metadata,
        warnings,
    })
}

fn parse_body(
    value: &Value,
    dimension: usize,
    lax: bool,
    warnings: &mut Vec<String>,
) -> PResult<ConvexBody> {
    let obj = as_object(value, "instance.body")?;
    let kind = as_str(required(obj, "kind", "instance.body")?, "instance.body.kind")?;
    match kind {
        "ball" => {
            expect_keys(
                obj,
                "instance.body",
                &["kind", "center", "radius"],
                lax,
                warnings,
            )?;
            let center = parse_vector(
                required(obj, "center", "instance.body")?,
                "instance.body.center",
                dimension,
            )?;
            let radius = parse_number(
                required(obj, "radius", "instance.body")?,
                "instance.body.radius",
            )?;
            ConvexBody::ball(center, radius)
                .map_err(|e| ParseError(format!("instance.body: {e}")))
        }
        "polytope" => {
            expect_keys(obj, "instance.body", &["kind", "vertices"], lax, warnings)?;
            let verts_value = required(obj, "vertices", "instance.body")?;
            let list = verts_value.as_array().ok_or_else(|| {
                ParseError("instance.body.vertices must be an array".into())
            })?;
            let mut vertices = Vec::with_capacity(list.len());
            for (i, v) in list.iter().enumerate() {
                vertices.push(parse_vector(
                    v,
                    &format!("instance.body.vertices[{i}]"),
                    dimension,
                )?);
            }
            ConvexBody::polytope(vertices)
                .map_err(|e| ParseError(format!("instance.body: {e}")))
        }
        other => err(format!(
            "instance.body.kind must be \"ball\" or \"polytope\" (got \"{other}\")"
        )),
    }
}

fn parse_vector(value: &Value, path: &str, dimension: usize) -> PResult<Vector> {
    let list = value
        .as_array()
        .ok_or_else(|| ParseError(format!("{path} must be an array of number strings")))?;
    if list.len() != dimension {
        return err(format!(
            "{path} has {} coordinates, expected dimension {dimension}",
            list.len()
        ));
    }
    let mut coords = Vec::with_capacity(dimension);
    for (i, v) in list.iter().enumerate() {
        coords.push(parse_number(v, &format!("{path}[{i}]"))?);
    }
    Ok(Vector::new(coords))
}

/// Parses a number string: decimal (`"-0.25"`) or exact fraction (`"p/q"`).
fn parse_number(value: &Value, path: &str) -> PResult<f64> {
    let s = value
        .as_str()
        .ok_or_else(|| ParseError(format!("{path} must be a number string (got {value})")))?;
    let parsed = if let Some((p, q)) = s.split_once('/') {
        let num: f64 = p
            .trim()
            .parse::<i64>()
            .map_err(|_| ParseError(format!("{path}: bad fraction numerator \"{p}\"")))?
            as f64;
        let den_i: i64 = q
            .trim()
            .parse()
            .map_err(|_| ParseError(format!("{path}: bad fraction denominator \"{q}\"")))?;
        if den_i == 0 {
            return err(format!("{path}: fraction denominator is zero"));
        }
        num / den_i as f64
    } else {
        s.parse::<f64>()
            .map_err(|_| ParseError(format!("{path}: malformed number \"{s}\"")))?
    };
    if !parsed.is_finite() {
        return err(format!("{path}: number \"{s}\" is not finite"));
    }
    Ok(parsed)
}

fn as_object<'a>(value: &'a Value, path: &str) -> PResult<&'a Map<String, Value>> {
    value
        .as_object()
        .ok_or_else(|| ParseError(format!("{path} must be a JSON object")))
}

fn as_str<'a>(value: &'a Value, path: &str) -> PResult<&'a str> {
    value
        .as_str()
        .ok_or_else(|| ParseError(format!("{path} must be a string")))
}

fn required<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> PResult<&'a Value> {
    obj.get(key)
        .ok_or_else(|| ParseError(format!("{path} is missing required field \"{key}\"")))
}

fn expect_keys(
    obj: &Map<String, Value>,
    path: &str,
    allowed: &[&str],
    lax: bool,
    warnings: &mut Vec<String>,
) -> PResult<()> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            let msg = format!("unknown field \"{key}\" at {path}");
            if lax {
                warnings.push(msg);
            } else {
                return err(format!("{msg} (use --lax to ignore)"));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Canonical serialization

/// Shortest round-trip decimal form of a float.
pub fn format_number(x: f64) -> String {
    format!("{x}")
}

/// Serializes a family (plus metadata) to the canonical instance document:
/// two-space indentation, fixed field order, decimal number strings.
pub fn serialize_instance(family: &Family, metadata: &BTreeMap<String, String>) -> String {
    let mut out = String::new();
    let push_vec = |buf: &mut String, v: &Vector| {
        buf.push('[');
        for (i, c) in v.coords().iter().enumerate() {
            if i > 0 {
                buf.push_str(", ");
            }
            let _ = write!(buf, "\"{}\"", format_number(*c));
        }
        buf.push(']');
    };

    out.push_str("{\n");
    out.push_str("  \"format\": \"nonsep-instance\",\n");
    out.push_str("  \"version\": 1,\n");
    let _ = writeln!(out, "  \"dimension\": {},", family.dim());
    match family.body() {
        ConvexBody::Ball { center, radius } => {
            out.push_str("  \"body\": {\n    \"kind\": \"ball\",\n    \"center\": ");
            push_vec(&mut out, center);
            let _ = write!(
                out,
                ",\n    \"radius\": \"{}\"\n  }},\n",
                format_number(*radius)
            );
        }
        ConvexBody::Polytope { vertices } => {
            out.push_str("  \"body\": {\n    \"kind\": \"polytope\",\n    \"vertices\": [\n");
            for (i, v) in vertices.iter().enumerate() {
                out.push_str("      ");
                push_vec(&mut out, v);
                out.push_str(if i + 1 < vertices.len() { ",\n" } else { "\n" });
            }
            out.push_str("    ]\n  },\n");
        }
    }
    out.push_str("  \"members\": [\n");
    let count = family.members().len();
    for (i, m) in family.members().iter().enumerate() {
        out.push_str("    { \"translation\": ");
        push_vec(&mut out, m.translation());
        let _ = write!(out, ", \"scale\": \"{}\" }}", format_number(m.scale()));
        out.push_str(if i + 1 < count { ",\n" } else { "\n" });
    }
    out.push_str("  ]");
    if metadata.is_empty() {
        out.push('\n');
    } else {
        out.push_str(",\n  \"metadata\": {\n");
        let last = metadata.len() - 1;
        for (i, (k, v)) in metadata.iter().enumerate() {
            let _ = write!(
                out,
                "    {}: {}",
                serde_json::to_string(k).expect("string serializes"),
                serde_json::to_string(v).expect("string serializes")
            );
            out.push_str(if i < last { ",\n" } else { "\n" });
        }
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}
