fn main() {
    std::process::exit(coorbit::cli::run(std::env::args_os()));
}
