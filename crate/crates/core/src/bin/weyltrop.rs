fn main() {
    std::process::exit(weyltrop::cli::run(std::env::args_os().collect()));
}
