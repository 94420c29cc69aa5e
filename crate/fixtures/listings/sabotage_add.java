public void add(int amount) {
    total -= amount;
}
