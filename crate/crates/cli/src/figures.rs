//! Fixed figure scenarios rendered as SVG.
//!
//! Control points are chosen here for illustration; only the spaces,
//! intervals and the elevation or join rules are prescribed.

use muntz::geometry::{curve_derivative, elevate, join_c1, sample_curve, JoinMode};
use muntz::{ExactCurve, MuntzCurve, MuntzSpace, Partition, Rational, Scalar};

use crate::doc::ApiError;
use crate::ops::describe;
use crate::svg::Plot;

/// Curve samples per drawn curve.
const CURVE_SAMPLES: usize = 97;

pub const FIGURES: [u32; 6] = [1, 2, 3, 4, 6, 7];

fn q(p: i64) -> Rational {
    Rational::from_integer(p.into())
}

fn points(raw: &[(i64, i64)]) -> Vec<Vec<Rational>> {
    raw.iter().map(|&(x, y)| vec![q(x), q(y)]).collect()
}

fn curve(parts: &[u32], n: usize, a: i64, b: i64, raw: &[(i64, i64)]) -> Result<ExactCurve, ApiError> {
    let space = MuntzSpace::new(Partition::new(parts.to_vec())?, n)?;
    Ok(MuntzCurve::new(space, q(a), q(b), points(raw))?)
}

fn xy(p: &[Rational]) -> (f64, f64) {
    (p[0].to_f64(), p[1].to_f64())
}

fn polyline(c: &ExactCurve) -> Result<Vec<(f64, f64)>, ApiError> {
    Ok(sample_curve(c, CURVE_SAMPLES)?.iter().map(|s| xy(&s.point)).collect())
}

fn poly_pts(c: &ExactCurve) -> Vec<(f64, f64)> {
    c.points.iter().map(|p| xy(p)).collect()
}

fn span(c: &ExactCurve) -> String {
    let mut terms = vec!["1".to_string()];
    terms.extend(c.space.exponents().iter().map(|e| if *e == 1 { "t".to_string() } else { format!("t^{e}") }));
    format!("span({})", terms.join(", "))
}

fn space_name(c: &ExactCurve) -> String {
    format!("E_{}({})", describe(c.space.lambda()), c.space.n())
}

fn elevation_figure(parts: &[u32], target: &[u32]) -> Result<String, ApiError> {
    let c = curve(parts, 3, 1, 2, &[(0, 0), (1, 3), (3, 3), (4, 0)])?;
    let up = elevate(&c, &Partition::new(target.to_vec())?)?;
    let mut plot = Plot::new(format!("{} ⊂ {} on [1, 2]", space_name(&c), space_name(&up)));
    plot.note(format!("{} ⊂ {}", span(&c), span(&up)));
    plot.note("black: P, red: elevated points, blue: the common curve");
    plot.polygon(&poly_pts(&c), "black", false, "P");
    plot.polygon(&poly_pts(&up), "red", true, "Q");
    plot.curve(polyline(&c)?, "blue");
    Ok(plot.render())
}

fn shape_figure(title: &str, shapes: &[&[u32]]) -> Result<String, ApiError> {
    const COLORS: [&str; 4] = ["black", "red", "green", "blue"];
    let raw = [(0, 0), (1, 3), (3, 3), (4, 0)];
    let mut plot = Plot::new(title.to_string());
    plot.note("illustrative control polygon on [1, 4]; order 3");
    let base = curve(shapes[0], 3, 1, 4, &raw)?;
    plot.polygon(&poly_pts(&base), "gray", true, "P");
    for (shape, color) in shapes.iter().zip(COLORS) {
        let c = curve(shape, 3, 1, 4, &raw)?;
        plot.note(format!("{color}: {}", space_name(&c)));
        plot.curve(polyline(&c)?, color);
    }
    Ok(plot.render())
}

fn join_figure(left: ExactCurve, mu: &Partition, mode: JoinMode<Rational>, tail: &[(i64, i64)]) -> Result<String, ApiError> {
    let n = left.space.n();
    let j = join_c1(&left, mu, mode)?;
    let mut right_pts = vec![j.q0.clone(), j.q1.clone()];
    right_pts.extend(points(tail));
    let right = MuntzCurve::new(MuntzSpace::new(mu.clone(), n)?, left.b.clone(), j.c.clone(), right_pts)?;
    let dl = curve_derivative(&left, &left.b)?;
    let dr = curve_derivative(&right, &left.b)?;
    let mut plot = Plot::new(format!(
        "C1 join: {} on [{}, {}] then {} on [{}, {}]",
        space_name(&left),
        left.a,
        left.b,
        space_name(&right),
        right.a,
        right.b
    ));
    plot.note(format!(
        "c = {} ≈ {:.6}; one-sided derivatives at b agree: {}",
        j.c,
        j.c.to_f64(),
        if dl == dr { "yes" } else { "no" }
    ));
    plot.polygon(&poly_pts(&left), "black", true, "P");
    plot.polygon(&poly_pts(&right), "red", true, "Q");
    plot.curve(polyline(&left)?, "blue");
    plot.curve(polyline(&right)?, "green");
    Ok(plot.render())
}

pub fn figure(id: u32) -> Result<String, ApiError> {
    match id {
        1 => elevation_figure(&[1], &[]),
        2 => elevation_figure(&[2], &[1]),
        3 => shape_figure("Adding boxes to the first row of (2,1)", &[&[2, 1], &[3, 1], &[4, 1], &[5, 1]]),
        4 => shape_figure("Adding a box to every row of (2,1)", &[&[2, 1], &[3, 2, 1], &[4, 3, 2], &[5, 4, 3]]),
        6 => join_figure(
            curve(&[1, 1], 3, 1, 3, &[(0, 0), (1, 2), (3, 3), (5, 1)])?,
            &Partition::empty(),
            JoinMode::SolveForC { rho: q(1) },
            &[(9, 0), (10, 3)],
        ),
        7 => join_figure(
            curve(&[2, 1], 3, 1, 3, &[(0, 0), (1, 3), (3, 4), (5, 2)])?,
            &Partition::new(vec![1, 1])?,
            JoinMode::SolveForQ1 { c: q(5) },
            &[(9, 1), (10, 4)],
        ),
        _ => Err(ApiError::field("figure", format!("unknown figure {id}; available: 1, 2, 3, 4, 6, 7"))),
    }
}
