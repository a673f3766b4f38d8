//! Text, LaTeX and JSON renderings.
//!
//! All three list factors in the same canonical order.

use std::cmp::Reverse;
use std::fmt::Write;

use num_rational::BigRational;
use num_traits::{One, Signed};

use schurkit_core::arith::Linear;
use schurkit_core::semisimple::{Cause, SemisimplicityReport};
use schurkit_core::{FactoredRational, LinearForm, Multipartition, SparsePoly, Variable};

use crate::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Text,
}

fn text_var(v: Variable) -> String {
    v.to_string()
}

fn latex_var(v: Variable) -> String {
    match v {
        Variable::Param(s) => format!("q_{{{s}}}"),
        Variable::X => "x".to_string(),
    }
}

fn text_constant(c: &BigRational) -> String {
    c.to_string()
}

fn latex_constant(c: &BigRational) -> String {
    if c.is_integer() {
        return c.numer().to_string();
    }
    let sign = if c.is_negative() { "-" } else { "" };
    format!("{sign}\\frac{{{}}}{{{}}}", c.numer().abs(), c.denom())
}

/// ASCII rendering, e.g. `2(-1+q1-q2)(q1-q2)^2`.
pub fn factored_text(value: &FactoredRational) -> String {
    value.render(text_var, text_constant, |e| format!("^{e}"))
}

/// LaTeX rendering, e.g. `(1+q_{1}-q_{2})^{2}`.
pub fn factored_latex(value: &FactoredRational) -> String {
    value.render(latex_var, latex_constant, |e| format!("^{{{e}}}"))
}

fn poly_render(poly: &SparsePoly, var: impl Fn(Variable) -> String, latex: bool) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let alphabet = poly.alphabet();
    let mut terms: Vec<_> = poly.terms().collect();
    terms.sort_by_key(|(exps, _)| Reverse(exps.iter().sum::<u32>()));
    let mut out = String::new();
    for (k, (exps, c)) in terms.into_iter().enumerate() {
        if c.is_negative() {
            out.push('-');
        } else if k > 0 {
            out.push('+');
        }
        let is_constant = exps.iter().all(|&e| e == 0);
        let abs = c.abs();
        let mut first = true;
        if is_constant || !abs.is_one() {
            let _ = write!(out, "{abs}");
            first = false;
        }
        for (pos, &e) in exps.iter().enumerate().filter(|(_, &e)| e > 0) {
            if !first && !latex {
                out.push('*');
            }
            first = false;
            out.push_str(&var(alphabet.variable(pos)));
            if e > 1 {
                if latex {
                    let _ = write!(out, "^{{{e}}}");
                } else {
                    let _ = write!(out, "^{e}");
                }
            }
        }
    }
    out
}

pub fn poly_text(poly: &SparsePoly) -> String {
    poly_render(poly, text_var, false)
}

pub fn poly_latex(poly: &SparsePoly) -> String {
    poly_render(poly, latex_var, true)
}

pub fn format_factored(value: &FactoredRational, format: Format) -> String {
    match format {
        Format::Json => json::factored_to_json(value).to_string(),
        Format::Latex => factored_latex(value),
        Format::Text => factored_text(value),
    }
}

pub fn format_poly(poly: &SparsePoly, format: Format) -> String {
    match format {
        Format::Json => json::poly_to_json(poly).to_string(),
        Format::Latex => poly_latex(poly),
        Format::Text => poly_text(poly),
    }
}

/// The factor of the parameter invariant that vanishes, as ASCII.
pub fn cause_text(cause: &Cause, n: usize) -> String {
    match *cause {
        Cause::FactorialVanishes => format!("{n}! = 0"),
        Cause::Collision { s, t, k } => {
            match LinearForm::normalize(k, Some(Variable::Param(s)), Some(Variable::Param(t))) {
                Linear::Form { form, .. } => format!("{form} = 0"),
                Linear::Constant(c) => format!("{c} = 0"),
            }
        }
    }
}

fn multipartitions_text(list: &[Multipartition]) -> String {
    list.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn format_report(report: &SemisimplicityReport, n: usize, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&json::report_to_json(report))
            .expect("JSON values always serialize"),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "field: {}", report.field);
            let _ = writeln!(out, "p_value: {}", report.p_value);
            let _ = writeln!(out, "semisimple: {}", report.semisimple);
            let _ = writeln!(out, "agreement: {}", report.agreement);
            if let Some(cause) = &report.cause {
                let _ = writeln!(out, "cause: {}", cause_text(cause, n));
            }
            match &report.vanishing {
                Some(list) => {
                    let _ = write!(out, "vanishing: {}", multipartitions_text(list));
                }
                None => out.push_str("vanishing: not scanned"),
            }
            out.trim_end().to_string()
        }
        Format::Latex => {
            let mut out = format!(
                "% field {}, p_value {}, semisimple {}, agreement {}",
                report.field, report.p_value, report.semisimple, report.agreement
            );
            for lam in report.vanishing.iter().flatten() {
                let _ = write!(out, "\n{}", latex_row(&[lam.to_string()]));
            }
            out
        }
    }
}

/// One tabular row with every cell in math mode.
pub fn latex_row(cells: &[String]) -> String {
    let cells: Vec<String> = cells.iter().map(|c| format!("${c}$")).collect();
    format!("{} \\\\", cells.join(" & "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use schurkit_core::{p_invariant, Field, Specialization};

    fn q(s: usize) -> Option<Variable> {
        Some(Variable::Param(s))
    }

    #[test]
    fn factored_examples() {
        let d = FactoredRational::linear(0, q(1), q(2), 1).unwrap();
        assert_eq!(format_factored(&d, Format::Text), "(q1-q2)");
        assert_eq!(format_factored(&d, Format::Latex), "(q_{1}-q_{2})");
        let six = FactoredRational::from_integer(6);
        assert_eq!(format_factored(&six, Format::Latex), "6");
        assert_eq!(format_factored(&six, Format::Text), "6");
        let sq = FactoredRational::linear(1, q(1), q(2), 2).unwrap();
        assert_eq!(format_factored(&sq, Format::Latex), "(1+q_{1}-q_{2})^{2}");
        assert_eq!(format_factored(&sq, Format::Text), "(1+q1-q2)^2");
        assert_eq!(
            format_factored(&sq, Format::Json),
            r#"{"num":"1","den":"1","factors":[[{"c":1,"pos":"q1","neg":"q2"},2]]}"#
        );
    }

    #[test]
    fn product_of_opposite_shifts() {
        // (1+q1−q2)(1+q2−q1) = −(−1+q1−q2)(1+q1−q2)
        let mut v = FactoredRational::linear(1, q(1), q(2), 1).unwrap();
        v.mul_linear(1, q(2), q(1), 1).unwrap();
        assert_eq!(factored_latex(&v), "-(-1+q_{1}-q_{2})(1+q_{1}-q_{2})");
        assert_eq!(factored_text(&v), "-(-1+q1-q2)(1+q1-q2)");
    }

    #[test]
    fn rational_constants() {
        let mut half = FactoredRational::from_rational(BigRational::new((-1).into(), 2.into()));
        assert_eq!(factored_latex(&half), "-\\frac{1}{2}");
        half.mul_linear(0, Some(Variable::X), None, -1).unwrap();
        assert_eq!(factored_latex(&half), "-\\frac{1}{2}(x)^{-1}");
        assert_eq!(factored_text(&half), "-1/2(x)^-1");
    }

    #[test]
    fn polynomials() {
        let p = p_invariant(2, 2).expand().unwrap();
        assert_eq!(format_poly(&p, Format::Text), p.to_string());
        assert_eq!(
            format_poly(&p, Format::Latex),
            "2q_{1}^{3}-6q_{1}^{2}q_{2}+6q_{1}q_{2}^{2}-2q_{2}^{3}-2q_{1}+2q_{2}"
        );
        let zero = SparsePoly::zero(p.alphabet());
        assert_eq!(format_poly(&zero, Format::Latex), "0");
    }

    #[test]
    fn causes() {
        assert_eq!(cause_text(&Cause::FactorialVanishes, 3), "3! = 0");
        assert_eq!(
            cause_text(&Cause::Collision { s: 1, t: 2, k: -1 }, 2),
            "-1+q1-q2 = 0"
        );
        assert_eq!(
            cause_text(&Cause::Collision { s: 1, t: 3, k: 0 }, 2),
            "q1-q3 = 0"
        );
    }

    #[test]
    fn report_text() {
        let theta = Specialization::from_integers(Field::Rationals, &[3, 3]);
        let report = schurkit_core::semisimple::cross_check_criterion(2, 1, &theta).unwrap();
        assert_eq!(
            format_report(&report, 1, Format::Text),
            "field: Q\np_value: 0\nsemisimple: false\nagreement: true\ncause: q1-q2 = 0\nvanishing: ((1);(0)) ((0);(1))"
        );
        assert_eq!(
            format_report(&report, 1, Format::Latex),
            "% field Q, p_value 0, semisimple false, agreement true\n$((1);(0))$ \\\\\n$((0);(1))$ \\\\"
        );
    }
}
