//! JSON documents and their validation into core types.
//!
//! Structural problems (missing fields, malformed numbers, size guards) are
//! collected per field; mathematical problems surface as core errors.

use muntz::rational::{parse_rational, to_decimal};
use muntz::{ExactCurve, ExactSurface, MuntzCurve, MuntzSpace, Partition, Rational, TensorSurface};
use serde::Serialize;
use serde_json::{json, Value};

use crate::limits::Limits;

/// Digits after the point in decimal renderings.
pub const DECIMAL_PLACES: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldError {
    pub field: String,
    pub message: String,
}

#[derive(Debug, thiserror::Error)]
pub enum ApiError {
    #[error("invalid request: {}", summary(.0))]
    Invalid(Vec<FieldError>),
    #[error(transparent)]
    Domain(#[from] muntz::Error),
    #[error("{0}")]
    Io(String),
}

fn summary(fields: &[FieldError]) -> String {
    fields.iter().map(|f| format!("{}: {}", f.field, f.message)).collect::<Vec<_>>().join("; ")
}

impl ApiError {
    pub fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        ApiError::Invalid(vec![FieldError { field: field.into(), message: message.into() }])
    }

    pub fn to_json(&self) -> Value {
        match self {
            ApiError::Invalid(fields) => json!({ "error": "validation", "fields": fields }),
            ApiError::Domain(e) => json!({ "error": "domain", "kind": kind(e), "message": e.to_string() }),
            ApiError::Io(m) => json!({ "error": "io", "message": m }),
        }
    }
}

/// Variant name of a core error, e.g. `NotAnElevation`.
fn kind(e: &muntz::Error) -> String {
    format!("{e:?}").chars().take_while(|c| c.is_ascii_alphanumeric()).collect()
}

pub fn join_path(base: &str, key: &str) -> String {
    if base.is_empty() {
        key.to_string()
    } else {
        format!("{base}.{key}")
    }
}

/// Field-by-field reader that records every problem instead of stopping at
/// the first one.
#[derive(Default)]
pub struct Reader {
    errors: Vec<FieldError>,
}

impl Reader {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn fail(&mut self, field: &str, message: impl Into<String>) {
        self.errors.push(FieldError { field: field.to_string(), message: message.into() });
    }

    pub fn object<'v>(&mut self, v: &'v Value, path: &str) -> Option<&'v serde_json::Map<String, Value>> {
        let o = v.as_object();
        if o.is_none() {
            self.fail(path, "expected an object");
        }
        o
    }

    /// A required member of `obj`.
    pub fn get<'v>(&mut self, obj: &'v Value, path: &str, key: &str) -> Option<&'v Value> {
        let field = obj.get(key).filter(|v| !v.is_null());
        if field.is_none() {
            self.fail(&join_path(path, key), "missing");
        }
        field
    }

    pub fn rational(&mut self, v: &Value, path: &str) -> Option<Rational> {
        let text = match v {
            Value::String(s) => s.clone(),
            Value::Number(n) => n.to_string(),
            _ => {
                self.fail(path, "expected a rational as \"p/q\" or a decimal");
                return None;
            }
        };
        match parse_rational(&text) {
            Ok(r) => Some(r),
            Err(_) => {
                self.fail(path, format!("not a rational: {text}"));
                None
            }
        }
    }

    pub fn count(&mut self, v: &Value, path: &str) -> Option<usize> {
        match v.as_u64() {
            Some(x) => Some(x as usize),
            None => {
                self.fail(path, "expected a non-negative integer");
                None
            }
        }
    }

    pub fn partition(&mut self, v: &Value, path: &str, limits: &Limits) -> Option<Partition> {
        let parsed = match v {
            Value::String(s) => s.parse::<Partition>().map_err(|e| e.to_string()),
            Value::Array(items) => items
                .iter()
                .map(|x| x.as_u64().filter(|&p| p <= u32::MAX as u64).map(|p| p as u32))
                .collect::<Option<Vec<u32>>>()
                .ok_or_else(|| "parts must be non-negative integers".to_string())
                .and_then(|parts| Partition::new(parts).map_err(|e| e.to_string())),
            _ => Err("expected an array of parts such as [2,1]".to_string()),
        };
        match parsed {
            Ok(p) if p.weight() > limits.max_weight => {
                self.fail(path, format!("weight {} exceeds the limit {}", p.weight(), limits.max_weight));
                None
            }
            Ok(p) => Some(p),
            Err(m) => {
                self.fail(path, m);
                None
            }
        }
    }

    pub fn order(&mut self, v: &Value, path: &str, limits: &Limits) -> Option<usize> {
        let n = self.count(v, path)?;
        if n > limits.max_order {
            self.fail(path, format!("order {n} exceeds the limit {}", limits.max_order));
            return None;
        }
        Some(n)
    }

    pub fn rationals(&mut self, v: &Value, path: &str) -> Option<Vec<Rational>> {
        let Some(items) = v.as_array() else {
            self.fail(path, "expected an array of rationals");
            return None;
        };
        let out: Vec<Option<Rational>> =
            items.iter().enumerate().map(|(i, x)| self.rational(x, &format!("{path}[{i}]"))).collect();
        out.into_iter().collect()
    }

    pub fn interval(&mut self, v: &Value, path: &str) -> Option<(Rational, Rational)> {
        let xs = self.rationals(v, path)?;
        if xs.len() != 2 {
            self.fail(path, "expected exactly two endpoints");
            return None;
        }
        let mut it = xs.into_iter();
        Some((it.next().unwrap(), it.next().unwrap()))
    }

    /// Non-empty list of points sharing one positive dimension.
    pub fn points(&mut self, v: &Value, path: &str) -> Option<Vec<Vec<Rational>>> {
        let Some(items) = v.as_array() else {
            self.fail(path, "expected an array of points");
            return None;
        };
        if items.is_empty() {
            self.fail(path, "expected at least one point");
            return None;
        }
        let pts: Vec<Option<Vec<Rational>>> =
            items.iter().enumerate().map(|(i, x)| self.rationals(x, &format!("{path}[{i}]"))).collect();
        let pts: Vec<Vec<Rational>> = pts.into_iter().collect::<Option<_>>()?;
        let dim = pts[0].len();
        if dim == 0 || pts.iter().any(|p| p.len() != dim) {
            self.fail(path, "points must share one positive dimension");
            return None;
        }
        Some(pts)
    }

    pub fn finish<T>(self, value: Option<T>) -> Result<T, ApiError> {
        match value {
            Some(v) if self.errors.is_empty() => Ok(v),
            _ if self.errors.is_empty() => Err(ApiError::field("", "invalid request")),
            _ => Err(ApiError::Invalid(self.errors)),
        }
    }

    pub fn has_errors(&self) -> bool {
        !self.errors.is_empty()
    }
}

/// Unvalidated pieces of a curve document.
#[derive(Clone, Debug)]
pub struct CurveFields {
    pub partition: Partition,
    pub n: usize,
    pub interval: (Rational, Rational),
    pub points: Vec<Vec<Rational>>,
}

impl CurveFields {
    pub fn read(r: &mut Reader, v: &Value, path: &str, limits: &Limits) -> Option<Self> {
        r.object(v, path)?;
        let partition = r.get(v, path, "partition").and_then(|x| r.partition(x, &join_path(path, "partition"), limits));
        let n = r.get(v, path, "n").and_then(|x| r.order(x, &join_path(path, "n"), limits));
        let interval = r.get(v, path, "interval").and_then(|x| r.interval(x, &join_path(path, "interval")));
        let points = r.get(v, path, "points").and_then(|x| r.points(x, &join_path(path, "points")));
        Some(Self { partition: partition?, n: n?, interval: interval?, points: points? })
    }

    pub fn into_curve(self) -> Result<ExactCurve, ApiError> {
        let space = MuntzSpace::new(self.partition, self.n)?;
        Ok(MuntzCurve::new(space, self.interval.0, self.interval.1, self.points)?)
    }
}

pub fn parse_curve(v: &Value, limits: &Limits) -> Result<ExactCurve, ApiError> {
    let mut r = Reader::new();
    let fields = CurveFields::read(&mut r, v, "", limits);
    r.finish(fields)?.into_curve()
}

/// A tensor-product surface: the curve schema for the `u` direction plus
/// `v_partition` and `v_interval`, with `points[i][j]`.
pub fn parse_surface(v: &Value, limits: &Limits) -> Result<ExactSurface, ApiError> {
    let mut r = Reader::new();
    let fields = (|| {
        r.object(v, "")?;
        let lam = r.get(v, "", "partition").and_then(|x| r.partition(x, "partition", limits));
        let mu = r.get(v, "", "v_partition").and_then(|x| r.partition(x, "v_partition", limits));
        let n = r.get(v, "", "n").and_then(|x| r.order(x, "n", limits));
        let ui = r.get(v, "", "interval").and_then(|x| r.interval(x, "interval"));
        let vi = r.get(v, "", "v_interval").and_then(|x| r.interval(x, "v_interval"));
        let grid = r.get(v, "", "points").and_then(|x| {
            let rows = x.as_array();
            if rows.is_none() {
                r.fail("points", "expected rows of points");
            }
            let rows: Vec<Option<Vec<Vec<Rational>>>> =
                rows?.iter().enumerate().map(|(i, row)| r.points(row, &format!("points[{i}]"))).collect();
            rows.into_iter().collect::<Option<Vec<_>>>()
        });
        Some((lam?, mu?, n?, ui?, vi?, grid?))
    })();
    let (lam, mu, n, ui, vi, grid) = r.finish(fields)?;
    Ok(TensorSurface::new(MuntzSpace::new(lam, n)?, MuntzSpace::new(mu, n)?, ui, vi, grid)?)
}

/// `{"exact": "p/q", "decimal": "0.333333333333"}`.
pub fn num(x: &Rational) -> Value {
    json!({ "exact": x.to_string(), "decimal": to_decimal(x, DECIMAL_PLACES) })
}

pub fn nums(xs: &[Rational]) -> Value {
    Value::Array(xs.iter().map(num).collect())
}

/// A curve in the input schema, exact strings only, so it can be posted back.
pub fn curve_doc(c: &ExactCurve) -> Value {
    json!({
        "partition": c.space.lambda(),
        "n": c.space.n(),
        "interval": [c.a.to_string(), c.b.to_string()],
        "points": c.points.iter().map(|p| p.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}
