public void testT1() {
    Counter c = new Counter();
    assertEquals("starts empty", 0, c.total());
}
