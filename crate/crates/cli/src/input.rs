//! Reading input files and the `# vars:` / `# order:` header directives.

use std::fs;
use std::io::{self, Read};
use std::path::Path;

use involutive::{
    parse_monomial_list, parse_polynomial_list, Monomial, MonomialOrder, Polynomial,
    VariableContext,
};

use crate::CliError;

/// Reads `path`, or standard input for `-`.
pub fn read_source(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Io(format!("<stdin>: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Settings a file may carry in comment lines such as `# vars: x, y, z`
/// and `# order: lex`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Directives {
    pub vars: Option<VariableContext>,
    pub order: Option<MonomialOrder>,
}

pub fn directives(text: &str) -> Result<Directives, CliError> {
    let mut out = Directives::default();
    for (k, line) in text.lines().enumerate() {
        let Some(rest) = line.trim().strip_prefix('#') else {
            continue;
        };
        let Some((key, value)) = rest.split_once(':') else {
            continue;
        };
        let value = value.trim();
        match key.trim() {
            "vars" => {
                let ctx = VariableContext::parse_list(value)
                    .map_err(|e| CliError::Parse(format!("line {}: {e}", k + 1)))?;
                out.vars = Some(ctx);
            }
            "order" => {
                let order = value
                    .parse()
                    .map_err(|e: String| CliError::Parse(format!("line {}: {e}", k + 1)))?;
                out.order = Some(order);
            }
            _ => {}
        }
    }
    Ok(out)
}

/// A parsed polynomial file.
#[derive(Debug, Clone)]
pub struct PolynomialInput {
    pub polynomials: Vec<Polynomial>,
    pub context: VariableContext,
    pub order: MonomialOrder,
    /// Variables came from first appearance rather than a declaration.
    pub inferred: bool,
}

/// Parses a polynomial listing. Command-line settings win over directives;
/// the ordering defaults to degree-lexicographic.
pub fn polynomials(
    text: &str,
    vars: Option<&VariableContext>,
    order: Option<MonomialOrder>,
) -> Result<PolynomialInput, CliError> {
    let found = directives(text)?;
    let order = order.or(found.order).unwrap_or(MonomialOrder::DegLex);
    let declared = vars.or(found.vars.as_ref());
    let list =
        parse_polynomial_list(text, declared, order).map_err(|e| CliError::Parse(e.to_string()))?;
    Ok(PolynomialInput {
        polynomials: list.polynomials,
        context: list.context,
        order,
        inferred: list.inferred_variables,
    })
}

/// A parsed monomial file.
#[derive(Debug, Clone)]
pub struct MonomialInput {
    pub monomials: Vec<Monomial>,
    pub context: VariableContext,
    pub order: MonomialOrder,
    pub inferred: bool,
}

/// Parses a monomial listing. Without declared variables they are taken in
/// order of first appearance.
pub fn monomials(
    text: &str,
    vars: Option<&VariableContext>,
    order: Option<MonomialOrder>,
) -> Result<MonomialInput, CliError> {
    let found = directives(text)?;
    let order = order.or(found.order).unwrap_or(MonomialOrder::DegLex);
    let (context, inferred) = match vars.or(found.vars.as_ref()) {
        Some(ctx) => (ctx.clone(), false),
        None => (infer_context(text)?, true),
    };
    let monomials =
        parse_monomial_list(text, &context).map_err(|e| CliError::Parse(e.to_string()))?;
    Ok(MonomialInput {
        monomials,
        context,
        order,
        inferred,
    })
}

fn infer_context(text: &str) -> Result<VariableContext, CliError> {
    let mut names: Vec<String> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.starts_with('#') {
            continue;
        }
        let mut word = String::new();
        for c in line.chars().chain(std::iter::once(' ')) {
            if c.is_ascii_alphanumeric() || c == '_' {
                word.push(c);
            } else {
                if word.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_')
                    && !names.contains(&word)
                {
                    names.push(word.clone());
                }
                word.clear();
            }
        }
    }
    if names.is_empty() {
        return Err(CliError::Parse(
            "line 1, column 1: input contains no monomials".into(),
        ));
    }
    VariableContext::new(names).map_err(|e| CliError::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_directives() {
        let d = directives("# vars: x, y\n# order: lex\nx - 1\n# note: ignored\n").unwrap();
        assert_eq!(d.vars.unwrap().names(), ["x", "y"]);
        assert_eq!(d.order, Some(MonomialOrder::Lex));
        assert!(directives("# order: sideways\n").is_err());
    }

    #[test]
    fn flags_override_directives() {
        let text = "# vars: y, x\n# order: lex\nx*y - 1\n";
        let ctx = VariableContext::parse_list("x,y").unwrap();
        let input = polynomials(text, Some(&ctx), Some(MonomialOrder::DegRevLex)).unwrap();
        assert_eq!(input.context.names(), ["x", "y"]);
        assert_eq!(input.order, MonomialOrder::DegRevLex);
        let input = polynomials(text, None, None).unwrap();
        assert_eq!(input.context.names(), ["y", "x"]);
        assert!(!input.inferred);
    }

    #[test]
    fn infers_monomial_variables_in_order_of_appearance() {
        let input = monomials("z\nx^2\nx*y\n", None, None).unwrap();
        assert_eq!(input.context.names(), ["z", "x", "y"]);
        assert!(input.inferred);
        assert!(monomials("\n# only comments\n", None, None).is_err());
        assert!(monomials("x^-1\n", None, None).is_err());
    }
}
