public void testCountWithExplicitFilter() throws Throwable {
    Result result = new Counter().countMatching(new int[] {3, 4}, 4);
    assertNotNull("Result should not be null", result);
    assertTrue("Test should be successful", result.wasSuccessful());
}
