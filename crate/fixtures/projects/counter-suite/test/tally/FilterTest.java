package tally;

import org.junit.Assert;

public class FilterTest {
    public void testCountWithExplicitFilter() throws Throwable {
        Result result = new Counter().countMatching(new int[] {3, 4}, 4);
        Assert.assertNotNull("Result should not be null", result);
        Assert.assertTrue("Test should be successful", result.wasSuccessful());
    }
}
