fn main() {
    std::process::exit(wcgen::cli::run(std::env::args_os()));
}
