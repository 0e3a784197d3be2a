fn main() {
    std::process::exit(sointegra_cli::run(std::env::args_os()));
}
