fn main() {
    println!("snowbound");
}
