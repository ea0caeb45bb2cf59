use std::io::Write;

fn main() {
    let mut argv: Vec<String> = std::env::args().collect();
    match argv.first_mut() {
        Some(a) => *a = "deg".into(),
        None => argv.push("deg".into()),
    }
    let out = dualeq_cli::run(&argv);
    // a closed pipe downstream is not an error worth reporting
    let _ = std::io::stdout().write_all(out.stdout.as_bytes()).and_then(|_| std::io::stdout().flush());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}
