use std::io::Write;

fn main() {
    let env = std::env::var(sympgeo::cli::REGISTRY_ENV).ok();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = sympgeo::cli::run(std::env::args_os(), env, &mut stdout.lock(), &mut stderr.lock());
    let _ = std::io::stdout().flush();
    std::process::exit(code);
}
