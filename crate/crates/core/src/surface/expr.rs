//! Minimal arithmetic expression parser for user-supplied level sets.
//!
//! Grammar: numbers, the variables x/y/z, the constants pi/e, unary minus,
//! binary + - * / ^ (right-associative power), parentheses, and the
//! functions sin, cos, tan, exp, log, sqrt, abs, sinh, cosh, tanh.

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
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

#[derive(Debug, Clone)]
enum Node {
    Num(f64),
    Var(usize),
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Div(Box<Node>, Box<Node>),
    Pow(Box<Node>, Box<Node>),
    Fun(Func, Box<Node>),
}

#[derive(Debug, Clone, Copy)]
enum Func {
    Sin,
    Cos,
    Tan,
    Exp,
    Log,
    Sqrt,
    Abs,
    Sinh,
    Cosh,
    Tanh,
}

/// A parsed scalar expression in the variables x, y, z.
#[derive(Debug, Clone)]
pub struct Expression {
    root: Node,
}

impl Expression {
    pub fn parse(text: &str) -> Result<Self> {
        let tokens = tokenize(text)?;
        let mut parser = Parser { tokens, pos: 0 };
        let root = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(Error::Parse(format!(
                "unexpected trailing input at token {} in {text:?}",
                parser.pos
            )));
        }
        Ok(Self { root })
    }

    pub fn eval(&self, x: [f64; 3]) -> f64 {
        eval_node(&self.root, x)
    }
}

fn eval_node(node: &Node, x: [f64; 3]) -> f64 {
    match node {
        Node::Num(v) => *v,
        Node::Var(i) => x[*i],
        Node::Neg(a) => -eval_node(a, x),
        Node::Add(a, b) => eval_node(a, x) + eval_node(b, x),
        Node::Sub(a, b) => eval_node(a, x) - eval_node(b, x),
        Node::Mul(a, b) => eval_node(a, x) * eval_node(b, x),
        Node::Div(a, b) => eval_node(a, x) / eval_node(b, x),
        Node::Pow(a, b) => eval_node(a, x).powf(eval_node(b, x)),
        Node::Fun(f, a) => {
            let v = eval_node(a, x);
            match f {
                Func::Sin => v.sin(),
                Func::Cos => v.cos(),
                Func::Tan => v.tan(),
                Func::Exp => v.exp(),
                Func::Log => v.ln(),
                Func::Sqrt => v.sqrt(),
                Func::Abs => v.abs(),
                Func::Sinh => v.sinh(),
                Func::Cosh => v.cosh(),
                Func::Tanh => v.tanh(),
            }
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '(' => {
                out.push(Token::LParen);
                i += 1;
            }
            ')' => {
                out.push(Token::RParen);
                i += 1;
            }
            '0'..='9' | '.' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_digit()
                        || chars[i] == '.'
                        || chars[i] == 'e'
                        || chars[i] == 'E'
                        || ((chars[i] == '+' || chars[i] == '-')
                            && i > start
                            && (chars[i - 1] == 'e' || chars[i - 1] == 'E')))
                {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let v = s
                    .parse::<f64>()
                    .map_err(|_| Error::Parse(format!("bad number literal {s:?}")))?;
                out.push(Token::Num(v));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Node> {
        let mut lhs = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Token::Plus => {
                    self.next();
                    lhs = Node::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Token::Minus => {
                    self.next();
                    lhs = Node::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Node> {
        let mut lhs = self.unary()?;
        while let Some(tok) = self.peek() {
            match tok {
                Token::Star => {
                    self.next();
                    lhs = Node::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Token::Slash => {
                    self.next();
                    lhs = Node::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Node> {
        match self.peek() {
            Some(Token::Minus) => {
                self.next();
                Ok(Node::Neg(Box::new(self.unary()?)))
            }
            Some(Token::Plus) => {
                self.next();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Node> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.next();
            // right-associative; exponent may carry a unary sign
            let exp = self.unary()?;
            return Ok(Node::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Node> {
        match self.next() {
            Some(Token::Num(v)) => Ok(Node::Num(v)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(Error::Parse("missing closing parenthesis".into())),
                }
            }
            Some(Token::Ident(name)) => match name.as_str() {
                "x" => Ok(Node::Var(0)),
                "y" => Ok(Node::Var(1)),
                "z" => Ok(Node::Var(2)),
                "pi" => Ok(Node::Num(std::f64::consts::PI)),
                "e" => Ok(Node::Num(std::f64::consts::E)),
                func => {
                    let f = match func {
                        "sin" => Func::Sin,
                        "cos" => Func::Cos,
                        "tan" => Func::Tan,
                        "exp" => Func::Exp,
                        "log" | "ln" => Func::Log,
                        "sqrt" => Func::Sqrt,
                        "abs" => Func::Abs,
                        "sinh" => Func::Sinh,
                        "cosh" => Func::Cosh,
                        "tanh" => Func::Tanh,
                        other => {
                            return Err(Error::Parse(format!("unknown identifier {other:?}")))
                        }
                    };
                    match self.next() {
                        Some(Token::LParen) => {
                            let arg = self.expr()?;
                            match self.next() {
                                Some(Token::RParen) => Ok(Node::Fun(f, Box::new(arg))),
                                _ => Err(Error::Parse("missing closing parenthesis".into())),
                            }
                        }
                        _ => Err(Error::Parse(format!("function {name:?} needs parentheses"))),
                    }
                }
            },
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(text: &str, x: [f64; 3]) -> f64 {
        Expression::parse(text).unwrap().eval(x)
    }

    #[test]
    fn arithmetic_and_precedence() {
        assert_eq!(eval("1 + 2 * 3", [0.0; 3]), 7.0);
        assert_eq!(eval("(1 + 2) * 3", [0.0; 3]), 9.0);
        assert_eq!(eval("2 ^ 3 ^ 2", [0.0; 3]), 512.0); // right-associative
        assert_eq!(eval("-x^2", [3.0, 0.0, 0.0]), -9.0);
        assert_eq!(eval("6 / 3 / 2", [0.0; 3]), 1.0); // left-associative
        assert_eq!(eval("1 - 2 - 3", [0.0; 3]), -4.0);
    }

    #[test]
    fn variables_functions_constants() {
        let v = eval("sin(pi * x) + cos(0) * z", [0.5, 0.0, 2.0]);
        assert!((v - 3.0).abs() < 1e-12);
        assert!((eval("sqrt(abs(-9))", [0.0; 3]) - 3.0).abs() < 1e-12);
        assert!((eval("exp(log(5))", [0.0; 3]) - 5.0).abs() < 1e-12);
        assert!((eval("1.5e2 + y", [0.0, 0.5, 0.0]) - 150.5).abs() < 1e-12);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(Expression::parse("x +").is_err());
        assert!(Expression::parse("(x").is_err());
        assert!(Expression::parse("foo(x)").is_err());
        assert!(Expression::parse("x y").is_err());
        assert!(Expression::parse("sin x").is_err());
    }
}
