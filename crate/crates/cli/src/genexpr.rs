//! Generator mini-language for sequence rules.
//!
//! Arithmetic expressions over the index `k` and the order `m`, with `^`,
//! `exp`, `ln`, the constant `e`, and parentheses. The expression denotes
//! the term value `x_k`; evaluation produces `ln x_k` directly, so rules
//! like `exp(k^(m-1))` stay representable long after `e^(k^2)` overflows
//! any float. Deliberately tiny: no conditionals, no other functions.

use crate::CliError;

#[derive(Clone, Debug)]
pub enum Expr {
    Num(f64),
    VarK,
    VarM,
    ConstE,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Exp(Box<Expr>),
    Ln(Box<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<Token>, CliError> {
    let mut tokens = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '-' => {
                tokens.push(Token::Minus);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '/' => {
                tokens.push(Token::Slash);
                i += 1;
            }
            '^' => {
                tokens.push(Token::Caret);
                i += 1;
            }
            '(' => {
                tokens.push(Token::LParen);
                i += 1;
            }
            ')' => {
                tokens.push(Token::RParen);
                i += 1;
            }
            '0'..='9' | '.' => {
                let start = i;
                while i < bytes.len() && matches!(bytes[i] as char, '0'..='9' | '.') {
                    i += 1;
                }
                let text = &src[start..i];
                let num: f64 = text
                    .parse()
                    .map_err(|_| CliError::Parse(format!("bad number literal `{text}`")))?;
                tokens.push(Token::Num(num));
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_alphabetic() {
                    i += 1;
                }
                tokens.push(Token::Ident(src[start..i].to_string()));
            }
            other => {
                return Err(CliError::Parse(format!(
                    "unexpected character `{other}` in generator expression"
                )))
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Token) -> Result<(), CliError> {
        match self.bump() {
            Some(got) if got == t => Ok(()),
            got => Err(CliError::Parse(format!("expected {t:?}, found {got:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(Token::Slash) => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    // unary minus binds below `^`, so -k^2 is -(k^2)
    fn factor(&mut self) -> Result<Expr, CliError> {
        if matches!(self.peek(), Some(Token::Minus)) {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        self.power()
    }

    // right-associative power
    fn power(&mut self) -> Result<Expr, CliError> {
        let base = self.primary()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.bump();
            let exp = self.factor()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr, CliError> {
        match self.bump() {
            Some(Token::Num(n)) => Ok(Expr::Num(n)),
            Some(Token::LParen) => {
                let e = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(e)
            }
            Some(Token::Ident(name)) => match name.as_str() {
                "k" => Ok(Expr::VarK),
                "m" => Ok(Expr::VarM),
                "e" => Ok(Expr::ConstE),
                "exp" | "ln" => {
                    self.expect(Token::LParen)?;
                    let arg = self.expr()?;
                    self.expect(Token::RParen)?;
                    Ok(if name == "exp" {
                        Expr::Exp(Box::new(arg))
                    } else {
                        Expr::Ln(Box::new(arg))
                    })
                }
                other => Err(CliError::Parse(format!(
                    "unknown identifier `{other}` (expected k, m, e, exp, ln)"
                ))),
            },
            got => Err(CliError::Parse(format!(
                "unexpected token {got:?} in generator expression"
            ))),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, CliError> {
    let mut p = Parser {
        tokens: lex(src)?,
        pos: 0,
    };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(CliError::Parse(format!(
            "trailing input after expression: {:?}",
            &p.tokens[p.pos..]
        )));
    }
    Ok(e)
}

/// Classical evaluation; used for exponents and `exp` arguments.
pub fn eval_plain(e: &Expr, k: usize, m: usize) -> Result<f64, CliError> {
    let v = match e {
        Expr::Num(n) => *n,
        Expr::VarK => k as f64,
        Expr::VarM => m as f64,
        Expr::ConstE => std::f64::consts::E,
        Expr::Neg(a) => -eval_plain(a, k, m)?,
        Expr::Add(a, b) => eval_plain(a, k, m)? + eval_plain(b, k, m)?,
        Expr::Sub(a, b) => eval_plain(a, k, m)? - eval_plain(b, k, m)?,
        Expr::Mul(a, b) => eval_plain(a, k, m)? * eval_plain(b, k, m)?,
        Expr::Div(a, b) => eval_plain(a, k, m)? / eval_plain(b, k, m)?,
        Expr::Pow(a, b) => eval_plain(a, k, m)?.powf(eval_plain(b, k, m)?),
        Expr::Exp(a) => eval_plain(a, k, m)?.exp(),
        Expr::Ln(a) => {
            let v = eval_plain(a, k, m)?;
            if v <= 0.0 {
                return Err(CliError::Eval(format!(
                    "ln of non-positive value {v} at k={k}"
                )));
            }
            v.ln()
        }
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::Eval(format!(
            "expression value {v} at k={k} is not finite; wrap growth in exp(...)"
        )))
    }
}

/// Log-domain evaluation: returns `ln` of the expression's value without
/// materializing it, so `exp(huge)` stays finite.
pub fn eval_log(e: &Expr, k: usize, m: usize) -> Result<f64, CliError> {
    let nonpositive = |v: f64| {
        CliError::Eval(format!(
            "term value {v} at k={k} is not a positive real; sequence terms must stay positive"
        ))
    };
    let l = match e {
        Expr::Num(n) => {
            if *n <= 0.0 {
                return Err(nonpositive(*n));
            }
            n.ln()
        }
        Expr::VarK => (k as f64).ln(),
        Expr::VarM => (m as f64).ln(),
        Expr::ConstE => 1.0,
        Expr::Neg(a) => {
            let v = -eval_plain(a, k, m)?;
            if v <= 0.0 {
                return Err(nonpositive(v));
            }
            v.ln()
        }
        Expr::Add(a, b) => {
            let (la, lb) = (eval_log(a, k, m)?, eval_log(b, k, m)?);
            let (hi, lo) = if la >= lb { (la, lb) } else { (lb, la) };
            hi + (lo - hi).exp().ln_1p()
        }
        Expr::Sub(a, b) => {
            let (la, lb) = (eval_log(a, k, m)?, eval_log(b, k, m)?);
            if la <= lb {
                return Err(CliError::Eval(format!(
                    "subtraction at k={k} yields a non-positive term"
                )));
            }
            la + (-((lb - la).exp())).ln_1p()
        }
        Expr::Mul(a, b) => eval_log(a, k, m)? + eval_log(b, k, m)?,
        Expr::Div(a, b) => eval_log(a, k, m)? - eval_log(b, k, m)?,
        Expr::Pow(a, b) => eval_log(a, k, m)? * eval_plain(b, k, m)?,
        Expr::Exp(a) => eval_plain(a, k, m)?,
        Expr::Ln(a) => {
            let la = eval_log(a, k, m)?;
            if la <= 0.0 {
                return Err(CliError::Eval(format!(
                    "ln at k={k} yields a non-positive term"
                )));
            }
            la.ln()
        }
    };
    if l.is_finite() {
        Ok(l)
    } else {
        Err(CliError::Eval(format!(
            "log value {l} at k={k} is not finite"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn log_of(src: &str, k: usize, m: usize) -> f64 {
        eval_log(&parse(src).unwrap(), k, m).unwrap()
    }

    #[test]
    fn witness_generator_stays_in_log_domain() {
        // exp(k^(m-1)) at m=3: ln x_k = k^2, fine even where e^(k^2) overflows
        assert_eq!(log_of("exp(k^(m-1))", 5, 3), 25.0);
        assert_eq!(log_of("exp(k^(m-1))", 200, 3), 40000.0);
    }

    #[test]
    fn dual_generators() {
        // exp(-k^(-m-2)) at m=2: ln x_k = -k^{-4}
        let l = log_of("exp(-k^(-m-2))", 2, 2);
        assert!((l - (-(2.0f64.powi(-4)))).abs() < 1e-15);
        let l = log_of("exp(k^(-m))", 3, 2);
        assert!((l - 3.0f64.powi(-2)).abs() < 1e-15);
    }

    #[test]
    fn constants_and_arithmetic() {
        assert_eq!(log_of("1", 7, 1), 0.0);
        assert_eq!(log_of("e", 7, 1), 1.0);
        assert!((log_of("2*3", 1, 1) - 6.0f64.ln()).abs() < 1e-15);
        assert!((log_of("k/m", 6, 2) - 3.0f64.ln()).abs() < 1e-15);
        assert!((log_of("1+1", 1, 1) - 2.0f64.ln()).abs() < 1e-15);
        assert!((log_of("3-1", 1, 1) - 2.0f64.ln()).abs() < 1e-12);
        assert!((log_of("ln(exp(k))", 4, 1) - 4.0f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn rejects_nonpositive_terms_and_syntax_errors() {
        assert!(matches!(parse("2 +"), Err(CliError::Parse(_))));
        assert!(matches!(parse("foo(k)"), Err(CliError::Parse(_))));
        assert!(matches!(parse("(k"), Err(CliError::Parse(_))));
        assert!(matches!(parse("k 2"), Err(CliError::Parse(_))));
        let e = parse("1-2").unwrap();
        assert!(matches!(eval_log(&e, 1, 1), Err(CliError::Eval(_))));
        let e = parse("ln(1)").unwrap();
        assert!(matches!(eval_log(&e, 1, 1), Err(CliError::Eval(_))));
        let e = parse("-k").unwrap();
        assert!(matches!(eval_log(&e, 1, 1), Err(CliError::Eval(_))));
    }

    #[test]
    fn power_is_right_associative_and_minus_binds_low() {
        // -m-2 is (-m)-2; k^(-m-2) = k^{-(m+2)}
        assert_eq!(eval_plain(&parse("-m-2").unwrap(), 1, 3).unwrap(), -5.0);
        assert_eq!(eval_plain(&parse("2^3^2").unwrap(), 1, 1).unwrap(), 512.0);
        assert_eq!(eval_plain(&parse("-2^2").unwrap(), 1, 1).unwrap(), -4.0);
    }
}
